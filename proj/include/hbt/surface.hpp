#pragma once

// Handlebody presentations and the dividing set on the boundary of the ball
// obtained by cutting along the compressing disks.
//
// The cut-open boundary surface is drawn as a sphere with 2g holes, viewed
// from outside the ball. Each hole carries 2n marked points labelled
// counter-clockwise. Slot j of a hole holds the disk's dividing-curve
// endpoint j and, immediately counter-clockwise of it, the outer endpoint j;
// edge rounding joins these two. On the + copy hole point j is disk point j.
// On the - copy hole point m is disk point (offset - m) mod 2n.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hbt/chord_diagram.hpp"

namespace hbt {

enum class Copy : std::uint8_t { Plus, Minus };

inline char copy_char(Copy c) { return c == Copy::Plus ? '+' : '-'; }

struct HoleTag {
  int disk = 0;
  Copy copy = Copy::Plus;
  friend bool operator==(const HoleTag&, const HoleTag&) = default;
};

struct MarkedPoint {
  int hole = 0;
  int point = 0;
  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
  friend auto operator<=>(const MarkedPoint&, const MarkedPoint&) = default;
};

struct DiskSpec {
  int chords = 0;         // n_i; tb of the disk boundary is -n_i
  int offset = 0;         // identification of the - copy
  bool reversed = true;   // identifications must reverse order
  Sign anchor = Sign::Plus;
  friend bool operator==(const DiskSpec&, const DiskSpec&) = default;
};

// A complementary region of the boundary dividing set together with the disk
// boundaries, listed counter-clockwise as seen from outside. Consecutive
// points alternate between outer arcs and hole-boundary steps; a hole step
// goes from point p to point p-1.
using Face = std::vector<MarkedPoint>;

struct HandlebodyPresentation {
  int genus = 0;
  std::vector<DiskSpec> disks;
  std::vector<HoleTag> holes;
  std::vector<std::pair<MarkedPoint, MarkedPoint>> outer_arcs;
  int closed_outer_components = 0;
  std::optional<std::vector<Face>> faces;

  friend bool operator==(const HandlebodyPresentation&, const HandlebodyPresentation&) = default;
};

struct Configuration {
  std::vector<ChordDiagram> diagrams;

  // "(0,1)(2,3)|(0,1)"
  std::string label() const;
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct ValidationReport {
  std::vector<std::string> warnings;
};

// Throws Error with DegreeViolation, BadIdentification, EmptyIntersection,
// UntightBoundary, BadCertificate or InvalidArgument.
ValidationReport validate_presentation(const HandlebodyPresentation& p);

// A multigraph in which every node should have degree two.
struct Pairing {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Number of cycles in a pairing, by union-find over its edges. Throws
// Error{DegreeViolation} unless every node has degree exactly two.
int count_cycles(const Pairing& pairing);

struct RoundedBoundary {
  // Node 2s is the disk endpoint of slot s, node 2s+1 its outer endpoint.
  // Edges: outer arcs, then chords of every hole, then rounding connectors.
  Pairing pairing;
  int components = 0;
  int extra_closed = 0;
  int total() const { return components + extra_closed; }
};

class SurfaceModel {
 public:
  explicit SurfaceModel(HandlebodyPresentation p);

  const HandlebodyPresentation& presentation() const { return p_; }
  const ValidationReport& validation() const { return report_; }
  int genus() const { return p_.genus; }
  int chords(int disk) const { return p_.disks[static_cast<std::size_t>(disk)].chords; }
  int slot_count() const { return static_cast<int>(outer_.size()); }
  int slot(MarkedPoint m) const;
  int hole_of(int disk, Copy copy) const;

  // Moves a diagram between disk coordinates and the coordinates of one of
  // its holes (outside view). Both directions are the same map.
  ChordDiagram to_hole(const ChordDiagram& d, int disk, Copy copy) const;
  ChordDiagram from_hole(const ChordDiagram& d, int disk, Copy copy) const;

  // Throws Error{InvalidArgument} on a shape mismatch.
  void check(const Configuration& c) const;

  RoundedBoundary rounded_boundary(const Configuration& c) const;
  // rounded_boundary(c).total() without materialising the pairing.
  int sphere_count(const Configuration& c) const;
  bool potential_allowable(const Configuration& c) const { return sphere_count(c) == 1; }

  // Sphere count when only the chosen hole carries apply_bypass of `hole_arc`
  // (given in that hole's coordinates) and the other copy keeps the old
  // diagram. Loops closed up by a disallowed move count as curves.
  int peel_attach_count(const Configuration& c, int disk, Copy copy,
                        const BypassArc& hole_arc) const;

  // Counts closed curves given one diagram per hole, in hole coordinates.
  int count_hole_diagrams(std::span<const ChordDiagram> per_hole) const;

  std::vector<ChordDiagram> hole_diagrams(const Configuration& c) const;

 private:
  HandlebodyPresentation p_;
  ValidationReport report_;
  std::vector<int> hole_base_;
  std::vector<std::array<int, 2>> holes_of_disk_;
  std::vector<int> outer_;
};

RoundedBoundary rounded_boundary(const HandlebodyPresentation& p, const Configuration& c);
bool potential_allowable(const HandlebodyPresentation& p, const Configuration& c);
int peel_attach_count(const HandlebodyPresentation& p, const Configuration& c, int disk, Copy copy,
                      const BypassArc& hole_arc);

}  // namespace hbt
