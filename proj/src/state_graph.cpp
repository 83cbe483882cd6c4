#include "hbt/state_graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "hbt/error.hpp"

namespace hbt {

std::string Witness::label() const {
  return "disk " + std::to_string(disk) + " copy " + copy_char(copy) + " " + arc.label();
}

std::vector<Transition> transitions_from(const SurfaceModel& model, const Configuration& c) {
  std::vector<Transition> out;
  std::vector<ChordDiagram> per_hole = model.hole_diagrams(c);
  const int base = model.count_hole_diagrams(per_hole);
  if (base != 1) return out;
  std::set<Configuration> targets;
  for (int disk = 0; disk < model.genus(); ++disk) {
    for (Copy copy : {Copy::Plus, Copy::Minus}) {
      const auto h = static_cast<std::size_t>(model.hole_of(disk, copy));
      const ChordDiagram before = per_hole[h];
      for (const BypassArc& arc : enumerate_bypass_arcs(before, true)) {
        // Only bypasses attached from inside the ball peel off a layer.
        if (arc.side != Side::Back) continue;
        ChordDiagram after;
        try {
          after = apply_bypass(before, arc);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DisallowedClosedComponent) throw;
          continue;
        }
        per_hole[h] = after;
        const int count = model.count_hole_diagrams(per_hole);
        per_hole[h] = before;
        if (count != base) continue;
        Configuration next = c;
        next.diagrams[static_cast<std::size_t>(disk)] = model.from_hole(after, disk, copy);
        if (targets.insert(next).second) {
          out.push_back({std::move(next), Witness{disk, copy, arc}});
        }
      }
    }
  }
  return out;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t catalan_saturating(int n) {
  // C(k+1) = C(k) * 2(2k+1) / (k+2), exact at every step.
  unsigned __int128 c = 1;
  for (int k = 0; k < n; ++k) {
    c = c * static_cast<unsigned>(2 * (2 * k + 1)) / static_cast<unsigned>(k + 2);
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
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
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

template <typename Fn>
void parallel_for(int count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max(count, 1))));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (int i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Shortest directed path from `start` to a node that is not potentially
// allowable, or empty if there is none.
std::vector<int> bfs_to_failure(const TransitionGraph& g, int start) {
  std::vector<int> parent(static_cast<std::size_t>(g.node_count()), -2);
  std::deque<int> queue{start};
  parent[static_cast<std::size_t>(start)] = -1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (!g.potential[static_cast<std::size_t>(u)]) {
      std::vector<int> path;
      for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int v : g.successors(u)) {
      if (parent[static_cast<std::size_t>(v)] == -2) {
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  return {};
}

}  // namespace

int TransitionGraph::index_of(const Configuration& c) const {
  int index = 0;
  for (std::size_t i = 0; i < disk_diagrams.size(); ++i) {
    const auto& list = disk_diagrams[i];
    const auto it = std::lower_bound(list.begin(), list.end(), c.diagrams.at(i));
    if (it == list.end() || *it != c.diagrams[i]) return -1;
    index = index * static_cast<int>(list.size()) + static_cast<int>(it - list.begin());
  }
  return index;
}

std::vector<int> TransitionGraph::successors(int node) const {
  std::vector<int> out;
  auto it = std::lower_bound(edges.begin(), edges.end(), node,
                             [](const Edge& e, int n) { return e.from < n; });
  for (; it != edges.end() && it->from == node; ++it) out.push_back(it->to);
  return out;
}

std::uint64_t configuration_count(const HandlebodyPresentation& p) {
  std::uint64_t total = 1;
  for (const DiskSpec& d : p.disks) total = saturating_mul(total, catalan_saturating(d.chords));
  return total;
}

TransitionGraph explore(const SurfaceModel& model, const ExploreOptions& options) {
  const std::uint64_t total = configuration_count(model.presentation());
  if (total > options.config_limit) {
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(total) + " configurations exceed the limit of " +
                    std::to_string(options.config_limit));
  }
  TransitionGraph g;
  for (int i = 0; i < model.genus(); ++i) g.disk_diagrams.push_back(enumerate_diagrams(model.chords(i)));

  const int count = static_cast<int>(total);
  g.nodes.resize(static_cast<std::size_t>(count));
  for (int index = 0; index < count; ++index) {
    Configuration& c = g.nodes[static_cast<std::size_t>(index)];
    c.diagrams.resize(g.disk_diagrams.size());
    int rest = index;
    for (std::size_t i = g.disk_diagrams.size(); i-- > 0;) {
      const int size = static_cast<int>(g.disk_diagrams[i].size());
      c.diagrams[i] = g.disk_diagrams[i][static_cast<std::size_t>(rest % size)];
      rest /= size;
    }
  }

  g.sphere_counts.assign(static_cast<std::size_t>(count), 0);
  std::vector<std::vector<Edge>> out_edges(static_cast<std::size_t>(count));
  parallel_for(count, options.workers, [&](int index) {
    const Configuration& c = g.nodes[static_cast<std::size_t>(index)];
    g.sphere_counts[static_cast<std::size_t>(index)] = model.sphere_count(c);
    for (Transition& t : transitions_from(model, c)) {
      out_edges[static_cast<std::size_t>(index)].push_back(
          {index, g.index_of(t.target), std::move(t.witness)});
    }
  });

  g.potential.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g.potential[static_cast<std::size_t>(i)] = g.sphere_counts[static_cast<std::size_t>(i)] == 1;
  for (auto& list : out_edges) {
    std::stable_sort(list.begin(), list.end(), [](const Edge& a, const Edge& b) { return a.to < b.to; });
    for (Edge& e : list) g.edges.push_back(std::move(e));
  }

  UnionFind uf(count);
  for (const Edge& e : g.edges) uf.unite(e.from, e.to);
  std::map<int, int> component_id;
  g.component_of.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    auto [it, inserted] = component_id.emplace(uf.find(i), static_cast<int>(component_id.size()));
    if (inserted) g.components.emplace_back();
    g.component_of[static_cast<std::size_t>(i)] = it->second;
    g.components[static_cast<std::size_t>(it->second)].push_back(i);
  }
  for (const auto& members : g.components) {
    g.allowable.push_back(std::all_of(members.begin(), members.end(), [&](int m) {
      return g.potential[static_cast<std::size_t>(m)];
    }));
  }
  return g;
}

TightnessVerdict is_tight(const SurfaceModel& model, const Configuration& c,
                          const ExploreOptions& options) {
  model.check(c);
  TightnessVerdict verdict;
  if (!model.potential_allowable(c)) return verdict;

  struct Visit {
    int parent;
    Witness via;
  };
  std::map<Configuration, int> seen;
  std::vector<Configuration> order;
  std::vector<Visit> visits;
  seen.emplace(c, 0);
  order.push_back(c);
  visits.push_back({-1, {}});
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Configuration current = order[head];
    for (Transition& t : transitions_from(model, current)) {
      if (seen.contains(t.target)) continue;
      if (order.size() >= options.config_limit) {
        throw Error(ErrorCode::ResourceLimit,
                    "reachable set exceeds the limit of " + std::to_string(options.config_limit));
      }
      const int id = static_cast<int>(order.size());
      seen.emplace(t.target, id);
      order.push_back(t.target);
      visits.push_back({static_cast<int>(head), t.witness});
      if (!model.potential_allowable(t.target)) {
        for (int x = id; x != -1; x = visits[static_cast<std::size_t>(x)].parent) {
          verdict.path.push_back(order[static_cast<std::size_t>(x)]);
          if (visits[static_cast<std::size_t>(x)].parent != -1) {
            verdict.steps.push_back(visits[static_cast<std::size_t>(x)].via);
          }
        }
        std::reverse(verdict.path.begin(), verdict.path.end());
        std::reverse(verdict.steps.begin(), verdict.steps.end());
        return verdict;
      }
    }
  }
  verdict.tight = true;
  return verdict;
}

ClassificationReport classify(const TransitionGraph& g, const SurfaceModel& model) {
  ClassificationReport r;
  r.genus = model.genus();
  for (int i = 0; i < model.genus(); ++i) r.chords.push_back(model.chords(i));
  r.total_configurations = static_cast<std::uint64_t>(g.node_count());
  r.potentially_allowable_count =
      static_cast<int>(std::count(g.potential.begin(), g.potential.end(), true));
  r.transition_count = static_cast<int>(g.edges.size());
  r.component_count = static_cast<int>(g.components.size());
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    const auto& members = g.components[k];
    ComponentSummary s;
    s.id = static_cast<int>(k);
    s.size = static_cast<int>(members.size());
    s.allowable = g.allowable[k];
    s.representative = members.front();
    s.members = members;
    const Configuration& rep = g.nodes[static_cast<std::size_t>(s.representative)];
    for (int i = 0; i < model.genus(); ++i) {
      s.euler.push_back(euler_invariant(rep.diagrams[static_cast<std::size_t>(i)],
                                        model.presentation().disks[static_cast<std::size_t>(i)].anchor));
    }
    if (s.allowable) {
      ++r.tight_count;
      s.universally_tight = s.size == 1;
    } else {
      const auto first_potential = std::find_if(members.begin(), members.end(), [&](int m) {
        return g.potential[static_cast<std::size_t>(m)];
      });
      if (first_potential == members.end()) {
        s.witness_path = {members.front()};
      } else {
        s.witness_path = bfs_to_failure(g, *first_potential);
        for (std::size_t j = 0; j + 1 < s.witness_path.size(); ++j) {
          const int from = s.witness_path[j];
          const int to = s.witness_path[j + 1];
          const auto it = std::lower_bound(
              g.edges.begin(), g.edges.end(), std::pair{from, to},
              [](const Edge& e, const std::pair<int, int>& key) {
                return std::pair{e.from, e.to} < key;
              });
          s.witness_steps.push_back(it->witness);
        }
      }
    }
    r.components.push_back(std::move(s));
  }
  return r;
}

ClassificationReport classify(const SurfaceModel& model, const ExploreOptions& options) {
  return classify(explore(model, options), model);
}

}  // namespace hbt
