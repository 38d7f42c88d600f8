#include "egomap/louvain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "egomap/error.hpp"
#include "egomap/rng.hpp"

namespace egomap {

namespace {

// Weighted multigraph for the aggregation levels. Loop weight is stored once
// per node; it contributes twice to the node's volume, matching A_ii = 2w.
struct LevelGraph {
  std::vector<std::vector<std::pair<int, double>>> adj;  // no loops
  std::vector<double> loop;
  double total_weight = 0.0;  // m, loops included

  int size() const { return static_cast<int>(adj.size()); }

  double volume(int u) const {
    double v = 2.0 * loop[u];
    for (const auto& [w, weight] : adj[u]) {
      v += weight;
    }
    return v;
  }
};

// One sweep-until-stable local-move phase. comm is updated in place; returns
// whether any move happened.
bool local_moves(const LevelGraph& g, std::vector<int>& comm, Rng& rng) {
  const int n = g.size();
  const double m = g.total_weight;
  std::vector<double> vol(n);
  std::vector<double> comm_vol(n, 0.0);
  for (int u = 0; u < n; ++u) {
    vol[u] = g.volume(u);
    comm_vol[comm[u]] += vol[u];
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  bool any_move = false;
  bool moved = true;
  std::vector<double> weight_to(n, 0.0);
  while (moved) {
    moved = false;
    rng.shuffle(order);
    for (int u : order) {
      std::vector<int> touched;
      for (const auto& [v, w] : g.adj[u]) {
        int c = comm[v];
        if (weight_to[c] == 0.0) {
          touched.push_back(c);
        }
        weight_to[c] += w;
      }
      int cur = comm[u];
      comm_vol[cur] -= vol[u];

      // Insertion gain per candidate; the current community is always a
      // candidate so "stay" competes on equal terms.
      auto gain = [&](int c) {
        return weight_to[c] / m - comm_vol[c] * vol[u] / (2.0 * m * m);
      };
      if (weight_to[cur] == 0.0) {
        touched.push_back(cur);
      }
      std::sort(touched.begin(), touched.end());
      // Ascending scan with a strict compare: staying wins ties against any
      // move, and tied moves resolve to the smallest community index.
      int best = cur;
      double best_gain = gain(cur);
      for (int c : touched) {
        double cand = gain(c);
        if (cand > best_gain) {
          best = c;
          best_gain = cand;
        }
      }

      comm[u] = best;
      comm_vol[best] += vol[u];
      if (best != cur) {
        moved = true;
        any_move = true;
      }
      for (int c : touched) {
        weight_to[c] = 0.0;
      }
    }
  }
  return any_move;
}

// Renumbers communities by smallest member and collapses each into one node.
LevelGraph aggregate(const LevelGraph& g, std::vector<int>& comm) {
  const int n = g.size();
  std::vector<int> relabel(n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (relabel[comm[u]] < 0) {
      relabel[comm[u]] = next++;
    }
  }
  for (int u = 0; u < n; ++u) {
    comm[u] = relabel[comm[u]];
  }

  LevelGraph out;
  out.adj.resize(next);
  out.loop.assign(next, 0.0);
  out.total_weight = g.total_weight;
  std::map<std::pair<int, int>, double> between;
  for (int u = 0; u < n; ++u) {
    out.loop[comm[u]] += g.loop[u];
    for (const auto& [v, w] : g.adj[u]) {
      if (comm[u] == comm[v]) {
        if (u < v) {
          out.loop[comm[u]] += w;
        }
      } else if (u < v) {
        between[std::minmax(comm[u], comm[v])] += w;
      }
    }
  }
  for (const auto& [key, w] : between) {
    out.adj[key.first].emplace_back(key.second, w);
    out.adj[key.second].emplace_back(key.first, w);
  }
  return out;
}

}  // namespace

LouvainResult louvain(const UndirectedGraph& g, std::uint64_t seed) {
  if (g.edge_count() == 0) {
    throw Error(ErrorKind::UndefinedMetric,
                "louvain needs a graph with at least one edge");
  }

  const int n = static_cast<int>(g.vertex_count());
  LevelGraph level;
  level.adj.resize(n);
  level.loop.assign(n, 0.0);
  level.total_weight = static_cast<double>(g.edge_count());
  for (const auto& [u, v] : g.edge_list()) {
    level.adj[u].emplace_back(v, 1.0);
    level.adj[v].emplace_back(u, 1.0);
  }

  Rng rng(seed);
  std::vector<int> assign(n);
  std::iota(assign.begin(), assign.end(), 0);
  while (true) {
    std::vector<int> comm(level.size());
    std::iota(comm.begin(), comm.end(), 0);
    if (!local_moves(level, comm, rng)) {
      break;
    }
    level = aggregate(level, comm);
    for (int& a : assign) {
      a = comm[a];
    }
    if (level.size() == 1) {
      break;
    }
  }

  std::map<std::string, int> by_id;
  for (int u = 0; u < n; ++u) {
    by_id[g.id_of(u)] = assign[u];
  }
  LouvainResult result;
  result.partition = Partition::from_assignment(by_id);
  result.quality = modularity(g, result.partition);
  return result;
}

}  // namespace egomap
