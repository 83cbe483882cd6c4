#pragma once

// The graph of configurations and allowable state transitions, its
// components, and the resulting classification.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbt/chord_diagram.hpp"
#include "hbt/surface.hpp"

namespace hbt {

struct ExploreOptions {
  std::uint64_t config_limit = 1'000'000;
  unsigned workers = 1;
};

// How a transition was realised: a nontrivial bypass attached from inside
// the ball along `arc`, given in the coordinates of the chosen hole.
struct Witness {
  int disk = 0;
  Copy copy = Copy::Plus;
  BypassArc arc;
  std::string label() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Transition {
  Configuration target;
  Witness witness;
};

// Outgoing allowable transitions, deduplicated by target, in enumeration
// order (disk, copy, arc). Empty when `c` is not potentially allowable.
std::vector<Transition> transitions_from(const SurfaceModel& model, const Configuration& c);

struct Edge {
  int from = 0;
  int to = 0;
  Witness witness;
};

struct TransitionGraph {
  std::vector<std::vector<ChordDiagram>> disk_diagrams;  // per disk, canonical order
  std::vector<Configuration> nodes;       // lexicographic, disk 0 most significant
  std::vector<int> sphere_counts;         // #curves on the cut-open sphere
  std::vector<bool> potential;            // sphere_counts == 1
  std::vector<Edge> edges;                // sorted by (from, to)
  std::vector<int> component_of;
  std::vector<std::vector<int>> components;  // numbered by smallest member
  std::vector<bool> allowable;            // per component

  int node_count() const { return static_cast<int>(nodes.size()); }
  int index_of(const Configuration& c) const;
  std::vector<int> successors(int node) const;
};

// Product of Catalan(n_i); saturates at UINT64_MAX.
std::uint64_t configuration_count(const HandlebodyPresentation& p);

// Throws Error{ResourceLimit} when the configuration count exceeds the limit.
TransitionGraph explore(const SurfaceModel& model, const ExploreOptions& options = {});

struct TightnessVerdict {
  bool tight = false;
  // On overtwisted verdicts: configurations from `c` to one that is not
  // potentially allowable, with the witnesses of each step. Empty when `c`
  // itself fails.
  std::vector<Configuration> path;
  std::vector<Witness> steps;
};

TightnessVerdict is_tight(const SurfaceModel& model, const Configuration& c,
                          const ExploreOptions& options = {});

struct ComponentSummary {
  int id = 0;
  int size = 0;
  bool allowable = false;
  int representative = 0;            // smallest node index
  std::vector<int> euler;            // per disk, anchored signs
  bool universally_tight = false;    // singleton allowable component
  std::vector<int> members;
  std::vector<int> witness_path;     // disallowed components only
  std::vector<Witness> witness_steps;
};

struct ClassificationReport {
  int genus = 0;
  std::vector<int> chords;
  std::uint64_t total_configurations = 0;
  int potentially_allowable_count = 0;
  int transition_count = 0;
  int component_count = 0;
  int tight_count = 0;
  std::vector<ComponentSummary> components;
};

ClassificationReport classify(const TransitionGraph& graph, const SurfaceModel& model);
ClassificationReport classify(const SurfaceModel& model, const ExploreOptions& options = {});

}  // namespace hbt
