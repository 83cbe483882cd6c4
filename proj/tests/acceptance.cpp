// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "hbt/error.hpp"
#include "hbt/presentation_io.hpp"
#include "support.hpp"

using namespace hbt;
using hbt::testing::all_configurations;
using hbt::testing::read_text;
using hbt::testing::template_path;

namespace {

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

PresentationDocument load(const std::string& name) {
  return parse_presentation(read_text(template_path(name)));
}

// Shared by the solid-torus criteria.
ClassificationReport classify_template(const std::string& name, std::int64_t p, std::int64_t q,
                                       std::uint64_t configs) {
  const PresentationDocument doc = load(name);
  expect(doc.presentation == oracles::solid_torus_presentation(oracles::NegativeSlope(p, q)),
         name + " differs from the generated template");
  const SurfaceModel m(doc.presentation);
  const ClassificationReport r = classify(m);
  const std::uint64_t oracle = oracles::solid_torus_count(oracles::NegativeSlope(p, q));
  expect(r.total_configurations == configs, "configurations " + str(r.total_configurations));
  expect(static_cast<std::uint64_t>(r.tight_count) == oracle,
         "tight_count " + str(r.tight_count) + ", oracle " + str(oracle));
  return r;
}

std::string ac1() {
  const ClassificationReport r = classify_template("solid_torus_m1.hbt", 1, 1, 1);
  expect(r.potentially_allowable_count == 1, "not potentially allowable");
  expect(r.transition_count == 0, "transitions " + str(r.transition_count));
  expect(r.components.size() == 1 && r.components[0].universally_tight, "not universally tight");
  return "1 configuration, 0 transitions, tight_count 1, universally tight";
}

std::string ac2() {
  const ClassificationReport r = classify_template("solid_torus_m2.hbt", 2, 1, 2);
  expect(r.transition_count == 0, "edges " + str(r.transition_count));
  std::multiset<int> euler;
  for (const auto& c : r.components) {
    expect(c.universally_tight, "component " + str(c.id) + " not universally tight");
    euler.insert(c.euler.at(0));
  }
  expect(euler == std::multiset<int>{-1, 1}, "Euler invariants differ from -1, +1");
  for (const auto& d : enumerate_diagrams(2)) expect(d.all_boundary_parallel(), "not boundary-parallel");
  return "2 configurations, 0 edges, tight_count 2 = |[-2]|, Euler -1/+1";
}

std::string ac3() {
  classify_template("solid_torus_m3.hbt", 3, 1, 5);
  return "5 configurations, tight_count 3 = |[-3]|";
}

std::string ac4() {
  classify_template("solid_torus_m5_2.hbt", 5, 2, 42);
  return "42 configurations, tight_count 4 = |(-3+1)(-2)|";
}

std::string ac5() {
  for (int n = 0; n <= 8; ++n) {
    expect(enumerate_diagrams(n).size() == oracles::catalan(n), "Catalan count at n=" + str(n));
  }

  long moves = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      for (const auto& a : enumerate_bypass_arcs(d, false)) {
        ChordDiagram out;
        try {
          out = apply_bypass(d, a);
        } catch (const Error& e) {
          expect(e.code() == ErrorCode::DisallowedClosedComponent, "unexpected move failure");
          continue;
        }
        ++moves;
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          expect(euler_invariant(out, s) == euler_invariant(d, s), "Euler invariant changed: " + a.label());
        }
        if (a.trivial()) {
          expect(out == d, "trivial move changed " + d.label());
          bool disallowed = false;
          try {
            apply_bypass(d, a.with_side(opposite(a.side)));
          } catch (const Error& e) {
            disallowed = e.code() == ErrorCode::DisallowedClosedComponent;
          }
          expect(disallowed, "trivial move allowed on both sides: " + a.label());
        }
      }
    }
  }

  long peels = 0;
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const SurfaceModel m = testing::solid_torus(p, q);
      const TransitionGraph g = explore(m);
      for (int v = 0; v < g.node_count(); ++v) {
        const Configuration& c = g.nodes[static_cast<std::size_t>(v)];
        if (!g.potential[static_cast<std::size_t>(v)]) continue;
        for (Copy copy : {Copy::Plus, Copy::Minus}) {
          const ChordDiagram h = m.to_hole(c.diagrams[0], 0, copy);
          for (const auto& arc : enumerate_bypass_arcs(h, false)) {
            const int k = m.peel_attach_count(c, 0, copy, arc);
            expect(k == 1 || k == 3, "peel count " + str(k));
            ++peels;
          }
        }
      }
      std::set<std::pair<int, int>> edges;
      for (const Edge& e : g.edges) edges.insert({e.from, e.to});
      for (const Edge& e : g.edges) {
        if (g.potential[static_cast<std::size_t>(e.to)]) expect(edges.contains({e.to, e.from}), "edge asymmetry");
      }
      for (const auto& comp : g.components) {
        std::set<int> euler;
        for (int v : comp) euler.insert(euler_invariant(g.nodes[static_cast<std::size_t>(v)].diagrams[0]));
        expect(euler.size() == 1, "Euler invariant varies on a component");
      }
    }
  }

  std::mt19937 rng(20240601);
  const int fuzz = 10000;
  for (int i = 0; i < fuzz; ++i) {
    const int nodes = 2 * std::uniform_int_distribution<int>(1, 30)(rng);
    Pairing pr{nodes, {}};
    for (int round = 0; round < 2; ++round) {
      std::vector<int> perm(static_cast<std::size_t>(nodes));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int k = 0; k < nodes; k += 2) {
        pr.edges.emplace_back(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
      }
    }
    expect(oracles::trace_components(pr) == count_cycles(pr), "tracer disagreement on fuzz case " + str(i));
  }
  return str(moves) + " moves, " + str(peels) + " peels, " + str(fuzz) + " fuzzed pairings";
}

std::string ac6() {
  const PresentationDocument doc = load("genus2_n11.hbt");
  const SurfaceModel m(doc.presentation);
  expect(m.genus() == 2, "genus");
  ExploreOptions one;
  ExploreOptions many;
  many.workers = 8;
  const TransitionGraph a = explore(m, one);
  const TransitionGraph b = explore(m, many);
  expect(a.node_count() == 1, "node count " + str(a.node_count()));
  for (const auto& c : all_configurations(doc.presentation)) {
    const RoundedBoundary rb = m.rounded_boundary(c);
    expect(oracles::trace_components(rb.pairing) == rb.components, "tracer disagreement");
  }
  for (const Edge& e : a.edges) {
    expect(e.from >= 0 && e.from < a.node_count() && e.to >= 0 && e.to < a.node_count(), "dangling edge");
  }
  const std::string digest = input_digest(doc);
  const std::string r1 = format_report(classify(a, m), a, digest);
  const std::string r2 = format_report(classify(explore(m, one), m), a, digest);
  const std::string r3 = format_report(classify(b, m), b, digest);
  expect(r1 == r2, "report differs between runs");
  expect(r1 == r3, "report differs between 1 and 8 workers");
  expect(format_graph_dot(a) == format_graph_dot(b), "graph export differs between worker counts");
  return "1 node, tracer agrees, reports identical across runs and worker counts";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;
    std::function<std::string()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "standard solid torus (tb = -1)", 1, ac1},
      {"AC2", "slope -2 solid torus", 1, ac2},
      {"AC3", "slope -3 solid torus", 5, ac3},
      {"AC4", "slope -5/2 solid torus", 60, ac4},
      {"AC5", "property suite", 60, ac5},
      {"AC6", "genus-2 smoke test, n = (1,1)", 10, ac6},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.why;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > c.budget_seconds) {
      ok = false;
      detail += "; over the time budget";
    }
    failed += !ok;
    std::printf("%s %s: %s (%.3f s, budget %.0f s) %s\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_seconds, detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
