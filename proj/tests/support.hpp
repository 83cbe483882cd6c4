#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hbt/oracles.hpp"
#include "hbt/state_graph.hpp"

namespace hbt::testing {

inline SurfaceModel solid_torus(std::int64_t p, std::int64_t q = 1) {
  return SurfaceModel(oracles::solid_torus_presentation(oracles::NegativeSlope(p, q)));
}

inline Configuration config_of(std::initializer_list<std::vector<std::pair<int, int>>> per_disk) {
  Configuration c;
  for (const auto& pairs : per_disk) {
    c.diagrams.push_back(ChordDiagram::from_pairs(static_cast<int>(pairs.size()), pairs));
  }
  return c;
}

// Every configuration of a presentation, disk 0 most significant.
inline std::vector<Configuration> all_configurations(const HandlebodyPresentation& p) {
  std::vector<Configuration> out{Configuration{}};
  for (const DiskSpec& d : p.disks) {
    std::vector<Configuration> next;
    for (const Configuration& c : out) {
      for (const ChordDiagram& cd : enumerate_diagrams(d.chords)) {
        Configuration e = c;
        e.diagrams.push_back(cd);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

// A presentation with random outer arcs. No face certificate, so planarity
// is not required; the curve counts are still well defined.
inline HandlebodyPresentation random_presentation(std::mt19937& rng, int genus, int max_chords) {
  HandlebodyPresentation p;
  p.genus = genus;
  std::uniform_int_distribution<int> chords(1, max_chords);
  std::vector<MarkedPoint> points;
  for (int i = 0; i < genus; ++i) {
    DiskSpec d;
    d.chords = chords(rng);
    d.offset = std::uniform_int_distribution<int>(0, 2 * d.chords - 1)(rng);
    p.disks.push_back(d);
  }
  std::vector<HoleTag> holes;
  for (int i = 0; i < genus; ++i) {
    holes.push_back({i, Copy::Plus});
    holes.push_back({i, Copy::Minus});
  }
  std::shuffle(holes.begin(), holes.end(), rng);
  p.holes = holes;
  for (int h = 0; h < 2 * genus; ++h) {
    for (int k = 0; k < 2 * p.disks[static_cast<std::size_t>(p.holes[static_cast<std::size_t>(h)].disk)].chords; ++k) {
      points.push_back({h, k});
    }
  }
  std::shuffle(points.begin(), points.end(), rng);
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) p.outer_arcs.emplace_back(points[i], points[i + 1]);
  return p;
}

// A presentation whose outer arcs embed in the sphere with 2g holes. Each
// hole is bridged to a common base point; walking around the resulting disk
// passes every hole once, against its labels, starting at a random gap. Any
// non-crossing matching of that walk is a planar arc system.
inline HandlebodyPresentation random_planar_presentation(std::mt19937& rng, int genus, int max_chords) {
  HandlebodyPresentation p = random_presentation(rng, genus, max_chords);
  std::vector<MarkedPoint> walk;
  for (int h = 0; h < 2 * genus; ++h) {
    const int n2 = 2 * p.disks[static_cast<std::size_t>(p.holes[static_cast<std::size_t>(h)].disk)].chords;
    const int gap = std::uniform_int_distribution<int>(0, n2 - 1)(rng);
    for (int k = 0; k < n2; ++k) walk.push_back({h, ((gap - k) % n2 + n2) % n2});
  }
  const auto diagrams = enumerate_diagrams(static_cast<int>(walk.size()) / 2);
  const ChordDiagram& d = diagrams[std::uniform_int_distribution<std::size_t>(0, diagrams.size() - 1)(rng)];
  p.outer_arcs.clear();
  for (const auto& [a, b] : d.pairs()) {
    p.outer_arcs.emplace_back(walk[static_cast<std::size_t>(a)], walk[static_cast<std::size_t>(b)]);
  }
  return p;
}

// Planar presentations that have at least one configuration with a single
// curve on the cut-open sphere; most random ones have none.
inline std::vector<HandlebodyPresentation> planar_samples(std::mt19937& rng, int genus, int max_chords,
                                                          int wanted, int attempts = 5000) {
  std::vector<HandlebodyPresentation> out;
  for (int i = 0; i < attempts && static_cast<int>(out.size()) < wanted; ++i) {
    HandlebodyPresentation p = random_planar_presentation(rng, genus, max_chords);
    const SurfaceModel m(p);
    for (const Configuration& c : all_configurations(p)) {
      if (m.sphere_count(c) == 1) {
        out.push_back(std::move(p));
        break;
      }
    }
  }
  return out;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string template_path(const std::string& name) {
  return std::string(HBT_TEMPLATE_DIR) + "/" + name;
}

}  // namespace hbt::testing
