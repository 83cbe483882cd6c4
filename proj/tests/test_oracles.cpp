#include <numeric>

#include "doctest.h"
#include "hbt/error.hpp"
#include "support.hpp"

using namespace hbt;
using namespace hbt::oracles;

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(5) == 42);
  CHECK(catalan(10) == 16796);
  CHECK(catalan(36) == 11959798385860453492ULL);
  for (int n = 0; n <= 8; ++n) CHECK(catalan(n) == enumerate_diagrams(n).size());
  CHECK_THROWS_AS(catalan(37), Error);
  CHECK_THROWS_AS(catalan(-1), Error);
}

TEST_CASE("continued fractions and counts") {
  CHECK(NegativeSlope(1, 1).continued_fraction() == std::vector<std::int64_t>{-1});
  CHECK(NegativeSlope(2, 1).continued_fraction() == std::vector<std::int64_t>{-2});
  CHECK(NegativeSlope(5, 2).continued_fraction() == std::vector<std::int64_t>{-3, -2});
  CHECK(solid_torus_count(NegativeSlope(1, 1)) == 1);
  CHECK(solid_torus_count(NegativeSlope(2, 1)) == 2);
  CHECK(solid_torus_count(NegativeSlope(3, 1)) == 3);
  CHECK(solid_torus_count(NegativeSlope(5, 2)) == 4);
  CHECK(solid_torus_count(NegativeSlope(5, 3)) == 3);
  CHECK(solid_torus_count(NegativeSlope(7, 3)) == 4);

  for (std::int64_t p = 1; p <= 20; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const NegativeSlope s(p, q);
      CHECK(evaluate(s.continued_fraction()) == std::pair<std::int64_t, std::int64_t>{-p, q});
      if (p > 1) {
        for (std::int64_t r : s.continued_fraction()) CHECK(r <= -2);
      }
      // Integer slopes -p carry exactly p structures.
      if (q == 1) CHECK(solid_torus_count(s) == static_cast<std::uint64_t>(p));
    }
  }
}

TEST_CASE("bad slopes") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { NegativeSlope(2, 4); }) == ErrorCode::BadSlope);
  CHECK(code([] { NegativeSlope(1, 2); }) == ErrorCode::BadSlope);
  CHECK(code([] { NegativeSlope(0, 1); }) == ErrorCode::BadSlope);
  CHECK(code([] { NegativeSlope(-3, 1); }) == ErrorCode::BadSlope);
  CHECK(code([] { NegativeSlope(3, 0); }) == ErrorCode::BadSlope);
}

TEST_CASE("tracer on hand-made pairings") {
  CHECK(trace_components(Pairing{2, {{0, 1}, {0, 1}}}) == 1);
  CHECK(trace_components(Pairing{4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}}) == 2);
  CHECK(trace_components(Pairing{1, {{0, 0}}}) == 1);
  CHECK(trace_components(Pairing{0, {}}) == 0);
  CHECK_THROWS_AS(trace_components(Pairing{3, {{0, 1}, {1, 2}}}), Error);

  const SurfaceModel m = testing::solid_torus(1);
  const Configuration c{{enumerate_diagrams(1)[0]}};
  CHECK(trace_components(m.rounded_boundary(c).pairing) == 1);
}

TEST_CASE("tracer agrees with the union-find count on random pairings") {
  std::mt19937 rng(12345);
  int cases = 0;
  for (; cases < 12000; ++cases) {
    // A random 2-regular multigraph: the union of two random perfect
    // matchings on an even node set, with edges shuffled and flipped.
    const int half = std::uniform_int_distribution<int>(1, 40)(rng);
    const int nodes = 2 * half;
    Pairing p{nodes, {}};
    for (int round = 0; round < 2; ++round) {
      std::vector<int> perm(static_cast<std::size_t>(nodes));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < nodes; i += 2) {
        p.edges.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
      }
    }
    std::shuffle(p.edges.begin(), p.edges.end(), rng);
    for (auto& e : p.edges) {
      if (rng() % 2) std::swap(e.first, e.second);
    }
    REQUIRE(trace_components(p) == count_cycles(p));
  }
  CHECK(cases >= 10000);
}

TEST_CASE("solid torus template shape") {
  for (std::int64_t p = 1; p <= 8; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto pres = solid_torus_presentation(NegativeSlope(p, q));
      CHECK(pres.genus == 1);
      CHECK(pres.disks.at(0).chords == p);
      CHECK(pres.outer_arcs.size() == static_cast<std::size_t>(2 * p));
      CHECK(pres.faces.has_value());
      CHECK(validate_presentation(pres).warnings.empty());
      CHECK_FALSE(solid_torus_presentation(NegativeSlope(p, q), false).faces.has_value());
    }
  }
}
