#include "hbt/chord_diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "hbt/error.hpp"

namespace hbt {

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

const char* side_name(Side s) { return s == Side::Front ? "front" : "back"; }

ChordDiagram ChordDiagram::validate(std::vector<int> match) {
  const int m = static_cast<int>(match.size());
  if (m % 2 != 0) {
    throw Error(ErrorCode::NotInvolution, "odd number of points (" + std::to_string(m) + ")");
  }
  for (int i = 0; i < m; ++i) {
    const int j = match[static_cast<std::size_t>(i)];
    if (j < 0 || j >= m) {
      throw Error(ErrorCode::NotInvolution,
                  "point " + std::to_string(i) + " maps outside 0.." + std::to_string(m - 1));
    }
    if (j == i) throw Error(ErrorCode::NotInvolution, "point " + std::to_string(i) + " is fixed");
    if (match[static_cast<std::size_t>(j)] != i) {
      throw Error(ErrorCode::NotInvolution,
                  "points " + std::to_string(i) + " and " + std::to_string(j) + " disagree");
    }
  }
  // Non-crossing iff the chords nest like brackets when read around the circle.
  std::vector<int> open;
  for (int i = 0; i < m; ++i) {
    const int j = match[static_cast<std::size_t>(i)];
    if (j > i) {
      open.push_back(i);
    } else {
      if (open.back() != j) {
        throw Error(ErrorCode::CrossingChords,
                    "chord (" + std::to_string(j) + "," + std::to_string(i) + ") crosses chord (" +
                        std::to_string(open.back()) + "," +
                        std::to_string(match[static_cast<std::size_t>(open.back())]) + ")");
      }
      open.pop_back();
    }
  }
  return ChordDiagram(std::move(match));
}

ChordDiagram ChordDiagram::from_pairs(int chord_count,
                                      std::span<const std::pair<int, int>> pairs) {
  if (chord_count < 0) throw Error(ErrorCode::InvalidArgument, "negative chord count");
  const int m = 2 * chord_count;
  std::vector<int> match(static_cast<std::size_t>(m), -1);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      throw Error(ErrorCode::NotInvolution, "pair (" + std::to_string(a) + "," +
                                                std::to_string(b) + ") outside 0.." +
                                                std::to_string(m - 1));
    }
    if (match[static_cast<std::size_t>(a)] != -1 || match[static_cast<std::size_t>(b)] != -1) {
      throw Error(ErrorCode::NotInvolution, "point used by two chords in pair (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
    }
    match[static_cast<std::size_t>(a)] = b;
    match[static_cast<std::size_t>(b)] = a;
  }
  for (int i = 0; i < m; ++i) {
    if (match[static_cast<std::size_t>(i)] == -1) {
      throw Error(ErrorCode::NotInvolution, "point " + std::to_string(i) + " is unmatched");
    }
  }
  return validate(std::move(match));
}

std::vector<int> ChordDiagram::chords() const {
  std::vector<int> ids;
  for (int i = 0; i < point_count(); ++i) {
    if (partner(i) > i) ids.push_back(i);
  }
  return ids;
}

bool ChordDiagram::is_chord(int id) const {
  return id >= 0 && id < point_count() && partner(id) > id;
}

std::vector<std::pair<int, int>> ChordDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i : chords()) out.emplace_back(i, partner(i));
  return out;
}

std::string ChordDiagram::label() const {
  if (match_.empty()) return "()";
  std::string s;
  for (const auto& [a, b] : pairs()) {
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s;
}

bool ChordDiagram::all_boundary_parallel() const {
  const int m = point_count();
  for (int i = 0; i < m; ++i) {
    const int j = partner(i);
    if (j != (i + 1) % m && i != (j + 1) % m) return false;
  }
  return true;
}

std::vector<ChordDiagram> enumerate_diagrams(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative chord count");
  const int m = 2 * n;
  std::vector<ChordDiagram> out;
  std::vector<int> match(static_cast<std::size_t>(m), -1);
  // Match the smallest free point with every admissible partner; the points
  // strictly between them must close off among themselves.
  std::function<void(int)> fill = [&](int first) {
    while (first < m && match[static_cast<std::size_t>(first)] != -1) ++first;
    if (first == m) {
      out.push_back(ChordDiagram::validate(match));
      return;
    }
    int limit = m;
    for (int j = first + 1; j < m; ++j) {
      if (match[static_cast<std::size_t>(j)] != -1) {
        limit = j;
        break;
      }
    }
    for (int j = first + 1; j < limit; j += 2) {
      match[static_cast<std::size_t>(first)] = j;
      match[static_cast<std::size_t>(j)] = first;
      fill(first + 1);
      match[static_cast<std::size_t>(first)] = -1;
      match[static_cast<std::size_t>(j)] = -1;
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

SignedRegions::SignedRegions(const ChordDiagram& d, Sign anchor)
    : partner_(d.matching().begin(), d.matching().end()) {
  const int m = d.point_count();
  if (m == 0) {
    regions_.push_back(Region{{}, {}, anchor});
    return;
  }
  region_of_arc_.assign(static_cast<std::size_t>(m), -1);
  // Walking a face: leave arc i at point i+1, follow its chord, continue on
  // the arc starting at the far endpoint.
  for (int start = 0; start < m; ++start) {
    if (region_of_arc_[static_cast<std::size_t>(start)] != -1) continue;
    Region r;
    const int id = static_cast<int>(regions_.size());
    int arc = start;
    do {
      region_of_arc_[static_cast<std::size_t>(arc)] = id;
      const int p = (arc + 1) % m;
      const int q = d.partner(p);
      r.word.push_back({RegionEdge::Kind::Arc, arc});
      r.word.push_back({RegionEdge::Kind::Chord, std::min(p, q)});
      r.chords.push_back(std::min(p, q));
      arc = q;
    } while (arc != start);
    std::sort(r.chords.begin(), r.chords.end());
    // Arc i and arc i+1 are separated by one chord endpoint, so the sign
    // alternates with the arc index; arc m-1 carries the anchor.
    r.sign = (start % 2 == (m - 1) % 2) ? anchor : -anchor;
    regions_.push_back(std::move(r));
  }
}

std::pair<int, int> SignedRegions::sides_of_chord(int id) const {
  return {region_of_arc(id), region_of_arc(partner_[static_cast<std::size_t>(id)])};
}

bool SignedRegions::borders(int region, int chord) const {
  if (region < 0 || region >= size()) return false;
  const auto& cs = regions_[static_cast<std::size_t>(region)].chords;
  return std::binary_search(cs.begin(), cs.end(), chord);
}

SignedRegions signed_regions(const ChordDiagram& d, Sign anchor) { return SignedRegions(d, anchor); }

int euler_invariant(const ChordDiagram& d, Sign anchor) {
  int total = 0;
  for (const Region& r : SignedRegions(d, anchor).regions()) total += value(r.sign);
  return total;
}

std::string BypassArc::label() const {
  std::ostringstream os;
  os << "arc(" << c_start << "," << c_mid << "," << c_end << ";r" << r_in << ",r" << r_out << ";"
     << side_name(side) << ")";
  return os.str();
}

std::vector<BypassArc> enumerate_bypass_arcs(const ChordDiagram& d, bool nontrivial_only) {
  std::vector<BypassArc> out;
  if (d.chord_count() == 0) return out;
  const SignedRegions regions(d, Sign::Plus);
  for (int mid : d.chords()) {
    const auto [inside, outside] = regions.sides_of_chord(mid);
    for (const auto& [r_in, r_out] : {std::pair{inside, outside}, std::pair{outside, inside}}) {
      for (int cs : regions[r_in].chords) {
        for (int ce : regions[r_out].chords) {
          if (cs == mid && ce == mid) continue;
          if (ce == mid) continue;  // same arc as the reversal, doubled chord first
          const bool trivial = cs == mid;
          if (trivial && nontrivial_only) continue;
          if (!trivial && cs > ce) continue;
          for (Side side : {Side::Front, Side::Back}) {
            out.push_back({cs, mid, ce, r_in, r_out, side});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Six strand-ends on the boundary of a disk neighbourhood N of the arc, in
// counter-clockwise order: the right-hand ends of crossings 0,1,2 followed by
// the left-hand ends of crossings 2,1,0.
constexpr int right_end(int crossing) { return crossing; }
constexpr int left_end(int crossing) { return 5 - crossing; }

void check_arc(const ChordDiagram& d, const SignedRegions& regions, const BypassArc& a) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ArcNotInDiagram, a.label() + " on " + d.label() + ": " + why);
  };
  for (int c : {a.c_start, a.c_mid, a.c_end}) {
    if (!d.is_chord(c)) fail("no chord with identifier " + std::to_string(c));
  }
  if (a.c_start == a.c_mid && a.c_mid == a.c_end) fail("arc crosses one chord three times");
  const auto [x, y] = regions.sides_of_chord(a.c_mid);
  if (!((a.r_in == x && a.r_out == y) || (a.r_in == y && a.r_out == x))) {
    fail("regions do not lie on the two sides of the middle chord");
  }
  if (!regions.borders(a.r_in, a.c_start)) fail("first chord does not border r_in");
  if (!regions.borders(a.r_out, a.c_end)) fail("last chord does not border r_out");
}

}  // namespace

BypassOutcome attach_bypass(const ChordDiagram& d, const BypassArc& a) {
  const SignedRegions regions(d, Sign::Plus);
  check_arc(d, regions, a);

  auto other_side = [&](int chord, int region) {
    const auto [x, y] = regions.sides_of_chord(chord);
    return region == x ? y : x;
  };
  struct Crossing {
    int chord;
    int into;
  };
  const std::array<Crossing, 3> crossings{{{a.c_start, a.r_in},
                                           {a.c_mid, a.r_out},
                                           {a.c_end, other_side(a.c_end, a.r_out)}}};

  // Where each strand-end leads outside N: a boundary point (>= 0) or, for a
  // doubly crossed chord, the matching end of the other crossing (-1 - end).
  std::array<int, 6> outside{};
  for (int i = 0; i < 3; ++i) {
    const int c = crossings[static_cast<std::size_t>(i)].chord;
    const int far = d.partner(c);
    // Travelling from c to its partner, the side holding c+1..far-1 lies to
    // the right; entering that side puts the far endpoint on the arc's left.
    const bool into_inside = crossings[static_cast<std::size_t>(i)].into == regions.region_of_arc(c);
    outside[static_cast<std::size_t>(left_end(i))] = into_inside ? far : c;
    outside[static_cast<std::size_t>(right_end(i))] = into_inside ? c : far;
  }
  if (a.c_start == a.c_mid) {
    // Bigon on the arc's right between the first two crossings.
    outside[right_end(0)] = -1 - right_end(1);
    outside[right_end(1)] = -1 - right_end(0);
  } else if (a.c_mid == a.c_end) {
    outside[left_end(1)] = -1 - left_end(2);
    outside[left_end(2)] = -1 - left_end(1);
  }

  const int rotation = a.side == Side::Front ? 1 : 5;
  std::array<int, 6> inside{};
  for (const auto& [x, y] : {std::pair{0, 5}, std::pair{1, 4}, std::pair{2, 3}}) {
    const int u = (x + rotation) % 6;
    const int v = (y + rotation) % 6;
    inside[static_cast<std::size_t>(u)] = v;
    inside[static_cast<std::size_t>(v)] = u;
  }

  std::vector<int> match(d.matching().begin(), d.matching().end());
  std::array<bool, 6> visited{};
  for (int end = 0; end < 6; ++end) {
    const int start_point = outside[static_cast<std::size_t>(end)];
    if (start_point < 0 || visited[static_cast<std::size_t>(end)]) continue;
    int cur = end;
    while (true) {
      visited[static_cast<std::size_t>(cur)] = true;
      const int next = inside[static_cast<std::size_t>(cur)];
      visited[static_cast<std::size_t>(next)] = true;
      const int leads = outside[static_cast<std::size_t>(next)];
      if (leads >= 0) {
        match[static_cast<std::size_t>(start_point)] = leads;
        match[static_cast<std::size_t>(leads)] = start_point;
        break;
      }
      cur = -1 - leads;
    }
  }
  // Whatever was not reached from a boundary point forms closed loops.
  int loops = 0;
  for (int end = 0; end < 6; ++end) {
    if (visited[static_cast<std::size_t>(end)]) continue;
    ++loops;
    int cur = end;
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = true;
      const int next = inside[static_cast<std::size_t>(cur)];
      visited[static_cast<std::size_t>(next)] = true;
      cur = -1 - outside[static_cast<std::size_t>(next)];
    }
  }
  return {ChordDiagram::validate(std::move(match)), loops};
}

ChordDiagram apply_bypass(const ChordDiagram& d, const BypassArc& a) {
  BypassOutcome out = attach_bypass(d, a);
  if (out.closed_loops > 0) {
    throw Error(ErrorCode::DisallowedClosedComponent,
                a.label() + " on " + d.label() + " closes a dividing curve on the disk");
  }
  return std::move(out.diagram);
}

}  // namespace hbt
