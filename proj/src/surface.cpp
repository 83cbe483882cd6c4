#include "hbt/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hbt/error.hpp"

namespace hbt {

std::string Configuration::label() const {
  std::string s;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    if (i > 0) s += "|";
    s += diagrams[i].label();
  }
  return s;
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string point_name(const MarkedPoint& m) {
  return "(" + std::to_string(m.hole) + "," + std::to_string(m.point) + ")";
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

struct Layout {
  std::vector<int> hole_base;                 // first slot of each hole
  std::vector<std::array<int, 2>> holes_of_disk;
  int slots = 0;
};

Layout check_structure(const HandlebodyPresentation& p) {
  if (p.genus < 1) {
    throw Error(ErrorCode::InvalidArgument, "genus must be positive", "genus");
  }
  if (static_cast<int>(p.disks.size()) != p.genus) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(p.genus) + " disks, got " +
                    std::to_string(p.disks.size()),
                "disks");
  }
  for (std::size_t i = 0; i < p.disks.size(); ++i) {
    const DiskSpec& d = p.disks[i];
    const std::string where = "disk " + std::to_string(i);
    if (d.chords <= 0) {
      throw Error(ErrorCode::EmptyIntersection,
                  "the disk boundary must meet the dividing set (need n >= 1, got " +
                      std::to_string(d.chords) + ")",
                  where);
    }
    if (!d.reversed) {
      throw Error(ErrorCode::BadIdentification,
                  "the two copies of a disk must be identified by an order-reversing map", where);
    }
  }
  if (static_cast<int>(p.holes.size()) != 2 * p.genus) {
    throw Error(ErrorCode::BadIdentification,
                "expected " + std::to_string(2 * p.genus) + " holes, got " +
                    std::to_string(p.holes.size()),
                "holes");
  }
  Layout layout;
  layout.holes_of_disk.assign(p.disks.size(), {-1, -1});
  for (std::size_t h = 0; h < p.holes.size(); ++h) {
    const HoleTag& t = p.holes[h];
    const std::string where = "hole " + std::to_string(h);
    if (t.disk < 0 || t.disk >= p.genus) {
      throw Error(ErrorCode::BadIdentification, "hole refers to unknown disk " + std::to_string(t.disk),
                  where);
    }
    int& slot = layout.holes_of_disk[static_cast<std::size_t>(t.disk)][t.copy == Copy::Plus ? 0 : 1];
    if (slot != -1) {
      throw Error(ErrorCode::BadIdentification,
                  "disk " + std::to_string(t.disk) + " has two " + copy_char(t.copy) + " holes",
                  where);
    }
    slot = static_cast<int>(h);
    layout.hole_base.push_back(layout.slots);
    layout.slots += 2 * p.disks[static_cast<std::size_t>(t.disk)].chords;
  }
  return layout;
}

std::vector<int> outer_involution(const HandlebodyPresentation& p, const Layout& layout) {
  std::vector<int> outer(static_cast<std::size_t>(layout.slots), -1);
  auto slot_of = [&](const MarkedPoint& m, std::size_t arc) {
    const std::string where = "outer arc " + std::to_string(arc);
    if (m.hole < 0 || m.hole >= static_cast<int>(p.holes.size())) {
      throw Error(ErrorCode::DegreeViolation, "unknown hole in " + point_name(m), where);
    }
    const int n = p.disks[static_cast<std::size_t>(p.holes[static_cast<std::size_t>(m.hole)].disk)].chords;
    if (m.point < 0 || m.point >= 2 * n) {
      throw Error(ErrorCode::DegreeViolation, "no marked point " + point_name(m), where);
    }
    return layout.hole_base[static_cast<std::size_t>(m.hole)] + m.point;
  };
  for (std::size_t i = 0; i < p.outer_arcs.size(); ++i) {
    const int a = slot_of(p.outer_arcs[i].first, i);
    const int b = slot_of(p.outer_arcs[i].second, i);
    const std::string where = "outer arc " + std::to_string(i);
    if (a == b) {
      throw Error(ErrorCode::DegreeViolation,
                  "arc joins " + point_name(p.outer_arcs[i].first) + " to itself", where);
    }
    for (const auto& [s, m] : {std::pair{a, p.outer_arcs[i].first}, std::pair{b, p.outer_arcs[i].second}}) {
      if (outer[static_cast<std::size_t>(s)] != -1) {
        throw Error(ErrorCode::DegreeViolation,
                    "marked point " + point_name(m) + " is the endpoint of two outer arcs", where);
      }
    }
    outer[static_cast<std::size_t>(a)] = b;
    outer[static_cast<std::size_t>(b)] = a;
  }
  for (std::size_t h = 0; h < p.holes.size(); ++h) {
    const int n = p.disks[static_cast<std::size_t>(p.holes[h].disk)].chords;
    for (int pt = 0; pt < 2 * n; ++pt) {
      if (outer[static_cast<std::size_t>(layout.hole_base[h] + pt)] == -1) {
        throw Error(ErrorCode::DegreeViolation,
                    "marked point " + point_name({static_cast<int>(h), pt}) +
                        " is not the endpoint of any outer arc",
                    "hole " + std::to_string(h));
      }
    }
  }
  return outer;
}

// Rebuilds the closed boundary surface from the face certificate and checks
// that no dividing curve bounds a disk on it.
void check_faces(const HandlebodyPresentation& p, const Layout& layout, const std::vector<int>& outer,
                 ValidationReport& report) {
  const auto& faces = *p.faces;
  const int arcs = static_cast<int>(p.outer_arcs.size());
  std::vector<int> vertex_base;
  int vertices = 0;
  for (const DiskSpec& d : p.disks) {
    vertex_base.push_back(vertices);
    vertices += 2 * d.chords;
  }
  const int edges = arcs + vertices;  // outer arcs, then one boundary segment per disk point

  auto disk_point = [&](const MarkedPoint& m) {
    const HoleTag& t = p.holes[static_cast<std::size_t>(m.hole)];
    const DiskSpec& d = p.disks[static_cast<std::size_t>(t.disk)];
    return t.copy == Copy::Plus ? m.point : mod(d.offset - m.point, 2 * d.chords);
  };
  auto vertex = [&](const MarkedPoint& m) {
    return vertex_base[static_cast<std::size_t>(p.holes[static_cast<std::size_t>(m.hole)].disk)] +
           disk_point(m);
  };
  std::map<std::pair<int, int>, int> arc_of_slots;
  for (int i = 0; i < arcs; ++i) {
    const auto& [a, b] = p.outer_arcs[static_cast<std::size_t>(i)];
    arc_of_slots[{layout.hole_base[static_cast<std::size_t>(a.hole)] + a.point,
                  layout.hole_base[static_cast<std::size_t>(b.hole)] + b.point}] = i;
  }

  // Directed edge use: forward (tail end 0 -> head end 1) or backward.
  struct Step {
    int edge;
    bool forward;
  };
  std::vector<std::array<int, 2>> used(static_cast<std::size_t>(edges), {0, 0});
  std::vector<std::vector<Step>> face_steps(faces.size());
  std::vector<std::vector<int>> face_vertices(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Face& face = faces[f];
    const std::string where = "face " + std::to_string(f);
    if (face.size() < 2 || face.size() % 2 != 0) {
      throw Error(ErrorCode::BadCertificate, "a face needs an even number (>= 2) of corners", where);
    }
    for (const MarkedPoint& m : face) {
      if (m.hole < 0 || m.hole >= static_cast<int>(p.holes.size()) || m.point < 0 ||
          m.point >= 2 * p.disks[static_cast<std::size_t>(p.holes[static_cast<std::size_t>(m.hole)].disk)].chords) {
        throw Error(ErrorCode::BadCertificate, "no marked point " + point_name(m), where);
      }
    }
    // Steps alternate between outer arcs and hole steps; try both phases.
    auto read_steps = [&](std::size_t phase) -> std::optional<std::vector<Step>> {
      std::vector<Step> steps;
      for (std::size_t k = 0; k < face.size(); ++k) {
        const MarkedPoint& u = face[k];
        const MarkedPoint& w = face[(k + 1) % face.size()];
        const int su = layout.hole_base[static_cast<std::size_t>(u.hole)] + u.point;
        const int sw = layout.hole_base[static_cast<std::size_t>(w.hole)] + w.point;
        if (k % 2 == phase) {
          if (outer[static_cast<std::size_t>(su)] != sw) return std::nullopt;
          auto it = arc_of_slots.find({su, sw});
          steps.push_back(it != arc_of_slots.end() ? Step{it->second, true}
                                                   : Step{arc_of_slots.at({sw, su}), false});
        } else {
          if (u.hole != w.hole) return std::nullopt;
          const HoleTag& t = p.holes[static_cast<std::size_t>(u.hole)];
          const int n2 = 2 * p.disks[static_cast<std::size_t>(t.disk)].chords;
          if (w.point != mod(u.point - 1, n2)) return std::nullopt;
          // Segment d joins disk points d and d+1. The step runs along the hole
          // segment from w to w+1 backwards; the - copy reverses orientation.
          const int base = vertex_base[static_cast<std::size_t>(t.disk)];
          const int o = p.disks[static_cast<std::size_t>(t.disk)].offset;
          steps.push_back(t.copy == Copy::Plus ? Step{arcs + base + w.point, false}
                                               : Step{arcs + base + mod(o - w.point - 1, n2), true});
        }
      }
      return steps;
    };
    auto steps = read_steps(0);
    if (!steps) steps = read_steps(1);
    if (!steps) {
      throw Error(ErrorCode::BadCertificate,
                  "corners must alternate outer arcs and hole steps to the next lower label", where);
    }
    for (std::size_t k = 0; k < face.size(); ++k) {
      face_vertices[f].push_back(vertex(face[k]));
      const Step& step = (*steps)[k];
      int& count = used[static_cast<std::size_t>(step.edge)][step.forward ? 0 : 1];
      if (++count > 1) {
        throw Error(ErrorCode::BadCertificate,
                    "edge " + point_name(face[k]) + "->" + point_name(face[(k + 1) % face.size()]) +
                        " is traversed twice in the same direction",
                    where);
      }
    }
    face_steps[f] = std::move(*steps);
  }
  for (int e = 0; e < edges; ++e) {
    if (used[static_cast<std::size_t>(e)][0] != 1 || used[static_cast<std::size_t>(e)][1] != 1) {
      throw Error(ErrorCode::BadCertificate,
                  (e < arcs ? "outer arc " + std::to_string(e) : "disk boundary segment " + std::to_string(e - arcs)) +
                      " is not bordered by faces on both sides",
                  "faces");
    }
  }

  // Vertex links: corners map the arriving edge-end to the leaving edge-end.
  // Edge-end index 2e+0 is the tail, 2e+1 the head.
  std::vector<int> next_end(static_cast<std::size_t>(2 * edges), -1);
  for (const auto& steps : face_steps) {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const Step& in = steps[k];
      const Step& out = steps[(k + 1) % steps.size()];
      const int arrive = 2 * in.edge + (in.forward ? 1 : 0);
      const int leave = 2 * out.edge + (out.forward ? 0 : 1);
      next_end[static_cast<std::size_t>(arrive)] = leave;
    }
  }
  auto end_vertex = [&](int end) {
    const int e = end / 2;
    const bool head = end % 2 == 1;
    if (e < arcs) {
      const auto& [a, b] = p.outer_arcs[static_cast<std::size_t>(e)];
      return vertex(head ? b : a);
    }
    const int s = e - arcs;
    const auto it = std::upper_bound(vertex_base.begin(), vertex_base.end(), s);
    const int base = *(it - 1);
    const int n2 = 2 * p.disks[static_cast<std::size_t>(it - vertex_base.begin() - 1)].chords;
    return base + (head ? (s - base + 1) % n2 : s - base);
  };
  std::vector<int> link_cycles(static_cast<std::size_t>(vertices), 0);
  std::vector<bool> seen(next_end.size(), false);
  for (int end = 0; end < 2 * edges; ++end) {
    if (seen[static_cast<std::size_t>(end)]) continue;
    ++link_cycles[static_cast<std::size_t>(end_vertex(end))];
    for (int x = end; !seen[static_cast<std::size_t>(x)]; x = next_end[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  for (int v = 0; v < vertices; ++v) {
    if (link_cycles[static_cast<std::size_t>(v)] != 1) {
      throw Error(ErrorCode::BadCertificate,
                  "faces around a disk boundary point do not close up into a single disk", "faces");
    }
  }

  UnionFind faces_uf(static_cast<int>(faces.size()));
  std::vector<std::vector<int>> faces_on_edge(static_cast<std::size_t>(edges));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (const Step& s : face_steps[f]) faces_on_edge[static_cast<std::size_t>(s.edge)].push_back(static_cast<int>(f));
  }
  for (const auto& fs : faces_on_edge) faces_uf.unite(fs[0], fs[1]);
  for (std::size_t f = 1; f < faces.size(); ++f) {
    if (faces_uf.find(static_cast<int>(f)) != faces_uf.find(0)) {
      throw Error(ErrorCode::BadCertificate, "faces do not form a connected surface", "faces");
    }
  }
  const int chi = vertices - edges + static_cast<int>(faces.size());
  if (chi != 2 - 2 * p.genus) {
    throw Error(ErrorCode::BadCertificate,
                "faces build a surface with Euler characteristic " + std::to_string(chi) +
                    ", expected " + std::to_string(2 - 2 * p.genus),
                "faces");
  }

  // Dividing curves on the closed surface: outer arcs chained through the
  // identified disk boundary points.
  UnionFind curves(arcs);
  std::vector<int> arc_at_vertex(static_cast<std::size_t>(vertices), -1);
  for (int i = 0; i < arcs; ++i) {
    for (const MarkedPoint& m : {p.outer_arcs[static_cast<std::size_t>(i)].first, p.outer_arcs[static_cast<std::size_t>(i)].second}) {
      int& other = arc_at_vertex[static_cast<std::size_t>(vertex(m))];
      if (other == -1) {
        other = i;
      } else {
        curves.unite(other, i);
      }
    }
  }
  std::map<int, std::vector<int>> curve_arcs;
  for (int i = 0; i < arcs; ++i) curve_arcs[curves.find(i)].push_back(i);
  for (const auto& [root, members] : curve_arcs) {
    std::vector<bool> on_curve(static_cast<std::size_t>(edges), false);
    for (int i : members) on_curve[static_cast<std::size_t>(i)] = true;
    UnionFind sides(static_cast<int>(faces.size()));
    for (int e = 0; e < edges; ++e) {
      if (!on_curve[static_cast<std::size_t>(e)]) {
        sides.unite(faces_on_edge[static_cast<std::size_t>(e)][0], faces_on_edge[static_cast<std::size_t>(e)][1]);
      }
    }
    std::map<int, std::vector<int>> side_faces;
    for (std::size_t f = 0; f < faces.size(); ++f) side_faces[sides.find(static_cast<int>(f))].push_back(static_cast<int>(f));
    for (const auto& [side, fs] : side_faces) {
      std::vector<bool> has_vertex(static_cast<std::size_t>(vertices), false);
      std::vector<bool> has_edge(static_cast<std::size_t>(edges), false);
      for (int f : fs) {
        for (int v : face_vertices[static_cast<std::size_t>(f)]) has_vertex[static_cast<std::size_t>(v)] = true;
        for (const Step& s : face_steps[static_cast<std::size_t>(f)]) has_edge[static_cast<std::size_t>(s.edge)] = true;
      }
      const int side_chi = static_cast<int>(std::count(has_vertex.begin(), has_vertex.end(), true)) -
                           static_cast<int>(std::count(has_edge.begin(), has_edge.end(), true)) +
                           static_cast<int>(fs.size());
      if (side_chi == 1) {
        throw Error(ErrorCode::UntightBoundary,
                    "the dividing curve through outer arc " + std::to_string(members.front()) +
                        " bounds a disk on the boundary surface",
                    "outer arc " + std::to_string(members.front()));
      }
    }
  }
  if (p.closed_outer_components > 0) {
    report.warnings.push_back(
        "face certificate does not locate the closed dividing curves disjoint from the disks; "
        "their tightness is not checked");
  }
}

}  // namespace

ValidationReport validate_presentation(const HandlebodyPresentation& p) {
  ValidationReport report;
  const Layout layout = check_structure(p);
  const std::vector<int> outer = outer_involution(p, layout);
  if (p.closed_outer_components < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative closed component count", "closed");
  }
  if (p.closed_outer_components > 0) {
    report.warnings.push_back(
        std::to_string(p.closed_outer_components) +
        " closed dividing curve(s) avoid every disk boundary; the result depends on this choice "
        "of cutting disks");
  }
  if (p.faces) check_faces(p, layout, outer, report);
  return report;
}

SurfaceModel::SurfaceModel(HandlebodyPresentation p) : p_(std::move(p)) {
  report_ = validate_presentation(p_);
  Layout layout = check_structure(p_);
  hole_base_ = std::move(layout.hole_base);
  holes_of_disk_ = std::move(layout.holes_of_disk);
  outer_ = outer_involution(p_, Layout{hole_base_, holes_of_disk_, layout.slots});
}

int SurfaceModel::slot(MarkedPoint m) const {
  return hole_base_[static_cast<std::size_t>(m.hole)] + m.point;
}

int SurfaceModel::hole_of(int disk, Copy copy) const {
  return holes_of_disk_[static_cast<std::size_t>(disk)][copy == Copy::Plus ? 0 : 1];
}

ChordDiagram SurfaceModel::to_hole(const ChordDiagram& d, int disk, Copy copy) const {
  if (copy == Copy::Plus) return d;
  const int n2 = d.point_count();
  const int o = p_.disks[static_cast<std::size_t>(disk)].offset;
  std::vector<int> match(static_cast<std::size_t>(n2));
  for (int m = 0; m < n2; ++m) {
    match[static_cast<std::size_t>(m)] = mod(o - d.partner(mod(o - m, n2)), n2);
  }
  return ChordDiagram::validate(std::move(match));
}

ChordDiagram SurfaceModel::from_hole(const ChordDiagram& d, int disk, Copy copy) const {
  return to_hole(d, disk, copy);
}

void SurfaceModel::check(const Configuration& c) const {
  if (static_cast<int>(c.diagrams.size()) != p_.genus) {
    throw Error(ErrorCode::InvalidArgument,
                "configuration has " + std::to_string(c.diagrams.size()) + " diagrams, genus is " +
                    std::to_string(p_.genus),
                "config");
  }
  for (int i = 0; i < p_.genus; ++i) {
    if (c.diagrams[static_cast<std::size_t>(i)].chord_count() != chords(i)) {
      throw Error(ErrorCode::InvalidArgument,
                  "diagram has " + std::to_string(c.diagrams[static_cast<std::size_t>(i)].chord_count()) +
                      " chords, disk has n=" + std::to_string(chords(i)),
                  "config " + std::to_string(i));
    }
  }
}

std::vector<ChordDiagram> SurfaceModel::hole_diagrams(const Configuration& c) const {
  check(c);
  std::vector<ChordDiagram> out;
  for (const HoleTag& t : p_.holes) {
    out.push_back(to_hole(c.diagrams[static_cast<std::size_t>(t.disk)], t.disk, t.copy));
  }
  return out;
}

int SurfaceModel::count_hole_diagrams(std::span<const ChordDiagram> per_hole) const {
  const int slots = slot_count();
  std::vector<int> chord(static_cast<std::size_t>(slots));
  for (std::size_t h = 0; h < per_hole.size(); ++h) {
    const int base = hole_base_[h];
    for (int pt = 0; pt < per_hole[h].point_count(); ++pt) {
      chord[static_cast<std::size_t>(base + pt)] = base + per_hole[h].partner(pt);
    }
  }
  // Closed curves are the orbits of the group generated by the two
  // involutions; each orbit alternates outer arcs and chords.
  std::vector<bool> seen(static_cast<std::size_t>(slots), false);
  int components = 0;
  for (int s = 0; s < slots; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    int x = s;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      const int y = chord[static_cast<std::size_t>(x)];
      seen[static_cast<std::size_t>(y)] = true;
      x = outer_[static_cast<std::size_t>(y)];
    } while (x != s);
  }
  return components + p_.closed_outer_components;
}

int SurfaceModel::sphere_count(const Configuration& c) const {
  return count_hole_diagrams(hole_diagrams(c));
}

RoundedBoundary SurfaceModel::rounded_boundary(const Configuration& c) const {
  const std::vector<ChordDiagram> per_hole = hole_diagrams(c);
  RoundedBoundary rb;
  rb.pairing.node_count = 2 * slot_count();
  for (int s = 0; s < slot_count(); ++s) {
    if (outer_[static_cast<std::size_t>(s)] > s) {
      rb.pairing.edges.emplace_back(2 * s + 1, 2 * outer_[static_cast<std::size_t>(s)] + 1);
    }
  }
  for (std::size_t h = 0; h < per_hole.size(); ++h) {
    for (const auto& [a, b] : per_hole[h].pairs()) {
      rb.pairing.edges.emplace_back(2 * (hole_base_[h] + a), 2 * (hole_base_[h] + b));
    }
  }
  for (int s = 0; s < slot_count(); ++s) rb.pairing.edges.emplace_back(2 * s, 2 * s + 1);
  rb.extra_closed = p_.closed_outer_components;
  rb.components = count_hole_diagrams(per_hole) - rb.extra_closed;
  return rb;
}

int SurfaceModel::peel_attach_count(const Configuration& c, int disk, Copy copy,
                                    const BypassArc& hole_arc) const {
  if (disk < 0 || disk >= p_.genus) {
    throw Error(ErrorCode::InvalidArgument, "unknown disk " + std::to_string(disk));
  }
  std::vector<ChordDiagram> per_hole = hole_diagrams(c);
  auto& target = per_hole[static_cast<std::size_t>(hole_of(disk, copy))];
  BypassOutcome moved = attach_bypass(target, hole_arc);
  target = std::move(moved.diagram);
  return count_hole_diagrams(per_hole) + moved.closed_loops;
}

int count_cycles(const Pairing& pairing) {
  const auto n = static_cast<std::size_t>(pairing.node_count);
  std::vector<int> degree(n, 0);
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int classes = pairing.node_count;
  for (const auto& [a, b] : pairing.edges) {
    if (a < 0 || b < 0 || a >= pairing.node_count || b >= pairing.node_count) {
      throw Error(ErrorCode::DegreeViolation, "edge endpoint out of range");
    }
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --classes;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] != 2) {
      throw Error(ErrorCode::DegreeViolation,
                  "node " + std::to_string(i) + " has degree " + std::to_string(degree[i]));
    }
  }
  return classes;
}

RoundedBoundary rounded_boundary(const HandlebodyPresentation& p, const Configuration& c) {
  return SurfaceModel(p).rounded_boundary(c);
}

bool potential_allowable(const HandlebodyPresentation& p, const Configuration& c) {
  return SurfaceModel(p).potential_allowable(c);
}

int peel_attach_count(const HandlebodyPresentation& p, const Configuration& c, int disk, Copy copy,
                      const BypassArc& hole_arc) {
  return SurfaceModel(p).peel_attach_count(c, disk, copy, hole_arc);
}

}  // namespace hbt
