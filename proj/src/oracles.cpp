#include "hbt/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hbt/error.hpp"

namespace hbt::oracles {

std::uint64_t catalan(int n) {
  if (n < 0 || n > 36) {
    throw Error(ErrorCode::InvalidArgument, "catalan(" + std::to_string(n) + ") is out of range");
  }
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < k; ++i) {
      c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

NegativeSlope::NegativeSlope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  const std::string slope = "-" + std::to_string(p) + "/" + std::to_string(q);
  if (p <= 0 || q <= 0) throw Error(ErrorCode::BadSlope, "slope " + slope + " is not negative");
  if (std::gcd(p, q) != 1) throw Error(ErrorCode::BadSlope, "slope " + slope + " is not reduced");
  if (p < q) throw Error(ErrorCode::BadSlope, "slope " + slope + " lies in (-1, 0)");
  // x = a/b with b > 0; peel off floor(x) and continue with -1/(x - floor(x)).
  std::int64_t a = -p;
  std::int64_t b = q;
  while (true) {
    const std::int64_t r = a >= 0 ? a / b : -((-a + b - 1) / b);
    cf_.push_back(r);
    const std::int64_t rest = a - r * b;
    if (rest == 0) break;
    a = -b;
    b = rest;
  }
}

std::pair<std::int64_t, std::int64_t> evaluate(const std::vector<std::int64_t>& cf) {
  if (cf.empty()) throw Error(ErrorCode::InvalidArgument, "empty continued fraction");
  std::int64_t num = cf.back();
  std::int64_t den = 1;
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    // r - den/num
    const std::int64_t n2 = *it * num - den;
    const std::int64_t d2 = num;
    num = n2;
    den = d2;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::uint64_t solid_torus_count(const NegativeSlope& s) {
  const auto& cf = s.continued_fraction();
  std::int64_t product = cf.back();
  for (std::size_t i = 0; i + 1 < cf.size(); ++i) product *= cf[i] + 1;
  return static_cast<std::uint64_t>(product < 0 ? -product : product);
}

int trace_components(const Pairing& pairing) {
  struct End {
    int edge;
    int side;
  };
  std::vector<std::vector<End>> at(static_cast<std::size_t>(pairing.node_count));
  for (std::size_t e = 0; e < pairing.edges.size(); ++e) {
    const auto [a, b] = pairing.edges[e];
    if (a < 0 || b < 0 || a >= pairing.node_count || b >= pairing.node_count) {
      throw Error(ErrorCode::DegreeViolation, "edge " + std::to_string(e) + " leaves the node range");
    }
    at[static_cast<std::size_t>(a)].push_back({static_cast<int>(e), 0});
    at[static_cast<std::size_t>(b)].push_back({static_cast<int>(e), 1});
  }
  for (int v = 0; v < pairing.node_count; ++v) {
    if (at[static_cast<std::size_t>(v)].size() != 2) {
      throw Error(ErrorCode::DegreeViolation,
                  "node " + std::to_string(v) + " has degree " +
                      std::to_string(at[static_cast<std::size_t>(v)].size()));
    }
  }
  auto node_at = [&](int edge, int side) {
    const auto& e = pairing.edges[static_cast<std::size_t>(edge)];
    return side == 0 ? e.first : e.second;
  };
  std::vector<bool> walked(pairing.edges.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < pairing.edges.size(); ++start) {
    if (walked[start]) continue;
    ++cycles;
    int edge = static_cast<int>(start);
    int side = 1;  // arriving through this end
    while (!walked[static_cast<std::size_t>(edge)]) {
      walked[static_cast<std::size_t>(edge)] = true;
      const int node = node_at(edge, side);
      const auto& ends = at[static_cast<std::size_t>(node)];
      const End& leave = (ends[0].edge == edge && ends[0].side == side) ? ends[1] : ends[0];
      edge = leave.edge;
      side = 1 - leave.side;
    }
  }
  return cycles;
}

HandlebodyPresentation solid_torus_presentation(const NegativeSlope& s, bool with_faces) {
  const int n = static_cast<int>(s.p());
  const int n2 = 2 * n;
  const int shift = static_cast<int>((2 * s.q()) % n2);
  auto wrap = [n2](int x) { return ((x % n2) + n2) % n2; };

  HandlebodyPresentation p;
  p.genus = 1;
  p.disks.push_back(DiskSpec{n, 0, true, Sign::Plus});
  p.holes = {HoleTag{0, Copy::Plus}, HoleTag{0, Copy::Minus}};
  // Annulus arc k: bottom point k (hole 1 label -k) to top point k+shift,
  // whose outer endpoint belongs to top slot k+shift-1.
  for (int k = 0; k < n2; ++k) {
    p.outer_arcs.push_back({MarkedPoint{0, wrap(k + shift - 1)}, MarkedPoint{1, wrap(-k)}});
  }
  std::sort(p.outer_arcs.begin(), p.outer_arcs.end());
  if (with_faces) {
    std::vector<Face> faces;
    for (int k = 0; k < n2; ++k) {
      faces.push_back({MarkedPoint{1, wrap(-k)}, MarkedPoint{0, wrap(k + shift - 1)},
                       MarkedPoint{0, wrap(k + shift - 2)}, MarkedPoint{1, wrap(-k + 1)}});
    }
    p.faces = std::move(faces);
  }
  return p;
}

}  // namespace hbt::oracles
