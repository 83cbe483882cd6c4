#pragma once

// Disk dividing sets as non-crossing chord diagrams.
//
// A diagram with n chords lives on 2n marked points labelled 0..2n-1
// counter-clockwise around the boundary of an oriented disk. Boundary arc i
// runs from point i to point i+1 (mod 2n). A chord is identified by its
// smaller endpoint.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hbt {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int value(Sign s) { return static_cast<int>(s); }
char sign_char(Sign s);

// Side from which a bypass is attached, relative to the orientation of the
// surface the diagram is drawn on. Front turns the six local strand-ends one
// click counter-clockwise, Back one click clockwise.
enum class Side : std::uint8_t { Front, Back };

inline Side opposite(Side s) { return s == Side::Front ? Side::Back : Side::Front; }
const char* side_name(Side s);

class ChordDiagram {
 public:
  ChordDiagram() = default;

  // Checks that `match` is a fixed-point-free involution without crossings.
  // Throws Error{NotInvolution} or Error{CrossingChords}.
  static ChordDiagram validate(std::vector<int> match);
  static ChordDiagram from_pairs(int chord_count,
                                 std::span<const std::pair<int, int>> pairs);

  int chord_count() const { return static_cast<int>(match_.size() / 2); }
  int point_count() const { return static_cast<int>(match_.size()); }
  int partner(int point) const { return match_[static_cast<std::size_t>(point)]; }
  std::span<const int> matching() const { return match_; }

  // Chord identifiers (smaller endpoints) in increasing order.
  std::vector<int> chords() const;
  bool is_chord(int id) const;
  // Sorted (a,b) pairs with a < b.
  std::vector<std::pair<int, int>> pairs() const;
  // "(0,1)(2,3)"; "()" for the empty diagram.
  std::string label() const;

  // Every chord joins cyclically adjacent points.
  bool all_boundary_parallel() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
  friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) {
    return a.match_ <=> b.match_;
  }

 private:
  explicit ChordDiagram(std::vector<int> match) : match_(std::move(match)) {}
  std::vector<int> match_;
};

// All non-crossing perfect matchings of 2n points in lexicographic order of
// their involution tables. Catalan(n) entries.
std::vector<ChordDiagram> enumerate_diagrams(int n);

struct RegionEdge {
  enum class Kind : std::uint8_t { Arc, Chord };
  Kind kind;
  int id;  // boundary arc index or chord identifier
  friend bool operator==(const RegionEdge&, const RegionEdge&) = default;
};

struct Region {
  std::vector<RegionEdge> word;  // cyclic boundary word, starting at the smallest arc
  std::vector<int> chords;       // sorted chord identifiers on the boundary
  Sign sign = Sign::Plus;
};

// Faces of the disk cut along the chords, numbered in order of their smallest
// boundary arc. The face containing arc 2n-1 carries `anchor`.
class SignedRegions {
 public:
  SignedRegions(const ChordDiagram& d, Sign anchor);

  std::span<const Region> regions() const { return regions_; }
  int size() const { return static_cast<int>(regions_.size()); }
  const Region& operator[](int r) const { return regions_[static_cast<std::size_t>(r)]; }
  int region_of_arc(int arc) const { return region_of_arc_[static_cast<std::size_t>(arc)]; }

  // The two faces bordering chord `id`: first the one containing arc `id`
  // (the side holding points id+1..partner-1), then the other one.
  std::pair<int, int> sides_of_chord(int id) const;
  bool borders(int region, int chord) const;

 private:
  std::vector<int> partner_;
  std::vector<Region> regions_;
  std::vector<int> region_of_arc_;
};

SignedRegions signed_regions(const ChordDiagram& d, Sign anchor = Sign::Plus);

// #(+ regions) - #(- regions).
int euler_invariant(const ChordDiagram& d, Sign anchor = Sign::Plus);

// An arc of attachment crossing chords c_start, c_mid, c_end in that order.
// It runs inside r_in between the first two crossings and inside r_out
// between the last two.
struct BypassArc {
  int c_start = 0;
  int c_mid = 0;
  int c_end = 0;
  int r_in = 0;
  int r_out = 0;
  Side side = Side::Front;

  bool trivial() const { return c_start == c_mid || c_mid == c_end; }
  BypassArc reversed() const { return {c_end, c_mid, c_start, r_out, r_in, side}; }
  BypassArc with_side(Side s) const {
    BypassArc a = *this;
    a.side = s;
    return a;
  }
  std::string label() const;

  friend bool operator==(const BypassArc&, const BypassArc&) = default;
  friend auto operator<=>(const BypassArc&, const BypassArc&) = default;
};

// Canonical arcs of `d`, each geometric arc once per side, sorted.
// Nontrivial arcs are oriented with c_start < c_end; trivial arcs put the
// doubly crossed chord first. Arcs crossing a single chord three times are
// not produced.
std::vector<BypassArc> enumerate_bypass_arcs(const ChordDiagram& d, bool nontrivial_only);

struct BypassOutcome {
  ChordDiagram diagram;
  int closed_loops = 0;  // dividing curves closed up inside the disk
};

// The local bypass move along `a`, keeping any closed loops as a count.
// Throws Error{ArcNotInDiagram} when the arc does not fit `d`.
BypassOutcome attach_bypass(const ChordDiagram& d, const BypassArc& a);

// The local bypass move along `a`. Throws Error{ArcNotInDiagram} when the arc
// does not fit `d`, Error{DisallowedClosedComponent} when the reconnection
// closes a loop.
ChordDiagram apply_bypass(const ChordDiagram& d, const BypassArc& a);

}  // namespace hbt
