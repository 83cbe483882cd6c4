#pragma once

// Independent cross-checks: counting, the solid-torus classification count,
// and a naive curve tracer. None of these are used by the algorithm itself.

#include <cstdint>
#include <vector>

#include "hbt/surface.hpp"

namespace hbt::oracles {

// Exact Catalan number by the convolution recurrence. n <= 36.
std::uint64_t catalan(int n);

// Boundary slope -p/q of a solid torus with meridian slope 0.
class NegativeSlope {
 public:
  // Throws Error{BadSlope} unless p, q > 0 are coprime and p >= q.
  NegativeSlope(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  // -p/q = r0 - 1/(r1 - 1/(... - 1/rk)); all r_i <= -2 except for slope -1.
  const std::vector<std::int64_t>& continued_fraction() const { return cf_; }

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::vector<std::int64_t> cf_;
};

// Evaluates a continued fraction back to (numerator, denominator), with a
// positive reduced denominator.
std::pair<std::int64_t, std::int64_t> evaluate(const std::vector<std::int64_t>& cf);

// |(r0+1)(r1+1)...(r_{k-1}+1) r_k|.
std::uint64_t solid_torus_count(const NegativeSlope& s);

// Number of closed walks in a graph whose nodes all have degree two,
// found by walking edge to edge. Throws Error{DegreeViolation}.
int trace_components(const Pairing& pairing);

// A genus-1 presentation of the solid torus with two dividing curves of
// slope -p/q. The meridian disk meets them in 2p points; the annulus between
// the two copies carries arcs from bottom point k to top point k+2q.
HandlebodyPresentation solid_torus_presentation(const NegativeSlope& s, bool with_faces = true);

}  // namespace hbt::oracles
