#include "egomap/walktrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "egomap/error.hpp"

namespace egomap {

namespace {

// P^t rows for every vertex, via t sparse row-times-matrix passes.
std::vector<std::vector<double>> transition_rows(
    const std::vector<std::vector<int>>& adj, int t) {
  const std::size_t n = adj.size();
  std::vector<std::vector<double>> rows(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<double> p(n, 0.0);
    p[s] = 1.0;
    std::vector<double> next(n);
    for (int step = 0; step < t; ++step) {
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == 0.0) {
          continue;
        }
        double share = p[i] / static_cast<double>(adj[i].size());
        for (int j : adj[i]) {
          next[j] += share;
        }
      }
      p.swap(next);
    }
    rows[s] = std::move(p);
  }
  return rows;
}

}  // namespace

double WalkDistance::at(const std::string& a, const std::string& b) const {
  auto find = [&](const std::string& id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
      throw Error(ErrorKind::InvalidInput, "unknown vertex id: " + id);
    }
    return static_cast<int>(it - ids.begin());
  };
  return at(find(a), find(b));
}

WalkDistance walk_distance(const UndirectedGraph& g, int t) {
  if (t < 1) {
    throw Error(ErrorKind::InvalidInput, "walk length must be at least 1");
  }
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(static_cast<int>(i)) == 0) {
      throw Error(ErrorKind::InvalidInput,
                  "walk distance is undefined on zero-degree vertex: " +
                      g.id_of(static_cast<int>(i)));
    }
  }

  auto rows = transition_rows(g.adjacency(), t);
  WalkDistance d;
  d.t = t;
  d.ids = g.vertex_ids();
  d.values.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        double diff = rows[i][k] - rows[j][k];
        sum += diff * diff / g.degree(static_cast<int>(k));
      }
      double r = std::sqrt(sum);
      d.values[i * n + j] = r;
      d.values[j * n + i] = r;
    }
  }
  return d;
}

DetectionResult walktrap(const UndirectedGraph& g, int t) {
  if (t < 1) {
    throw Error(ErrorKind::InvalidInput, "walk length must be at least 1");
  }
  if (g.edge_count() == 0) {
    throw Error(ErrorKind::UndefinedMetric,
                "walktrap needs a graph with at least one edge");
  }

  // The walk machinery runs on the non-isolated vertices only; isolated ids
  // stay in the dendrogram as leaves that never merge.
  const int n_all = static_cast<int>(g.vertex_count());
  std::vector<int> walk_of(n_all, -1);  // g index -> walk index
  std::vector<int> g_of;                // walk index -> g index
  for (int v = 0; v < n_all; ++v) {
    if (g.degree(v) > 0) {
      walk_of[v] = static_cast<int>(g_of.size());
      g_of.push_back(v);
    }
  }
  const int n = static_cast<int>(g_of.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.edge_list()) {
    adj[walk_of[u]].push_back(walk_of[v]);
    adj[walk_of[v]].push_back(walk_of[u]);
  }
  std::vector<int> degree(n);
  for (int i = 0; i < n; ++i) {
    degree[i] = static_cast<int>(adj[i].size());
  }

  auto rows = transition_rows(adj, t);

  struct Community {
    bool alive = true;
    int size = 0;
    int min_member = 0;           // walk index, for tie ordering
    int node = 0;                 // dendrogram node
    std::vector<double> row;      // mean member row
    std::set<int> neighbors;      // alive community ids
  };
  std::vector<Community> comms(n);
  for (int i = 0; i < n; ++i) {
    comms[i].size = 1;
    comms[i].min_member = i;
    comms[i].node = g_of[i];
    comms[i].row = rows[i];
    comms[i].neighbors.insert(adj[i].begin(), adj[i].end());
  }

  // Ward cost of merging two communities, per Pons-Latapy.
  auto merge_cost = [&](const Community& a, const Community& b) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      double diff = a.row[k] - b.row[k];
      sum += diff * diff / degree[k];
    }
    double factor = static_cast<double>(a.size) * b.size / (a.size + b.size);
    return factor * sum / n;
  };

  std::map<std::pair<int, int>, double> cost;
  for (int i = 0; i < n; ++i) {
    for (int j : comms[i].neighbors) {
      if (i < j) {
        cost[{i, j}] = merge_cost(comms[i], comms[j]);
      }
    }
  }

  DetectionResult result;
  result.dendrogram.leaves = g.vertex_ids();
  double last_height = 0.0;
  while (!cost.empty()) {
    auto best = cost.begin();
    for (auto it = std::next(cost.begin()); it != cost.end(); ++it) {
      if (it->second < best->second) {
        best = it;
        continue;
      }
      if (it->second == best->second) {
        auto order = [&](const std::pair<int, int>& key) {
          return std::minmax(comms[key.first].min_member,
                             comms[key.second].min_member);
        };
        if (order(it->first) < order(best->first)) {
          best = it;
        }
      }
    }
    auto [a, b] = best->first;

    // Heights clamp to the running maximum so root paths are nondecreasing
    // even when the raw Ward costs dip.
    last_height = std::max(last_height, best->second);
    int node = n_all + static_cast<int>(result.dendrogram.merges.size());
    result.dendrogram.merges.push_back(
        {comms[a].node, comms[b].node, last_height});

    int id = static_cast<int>(comms.size());
    Community merged;
    merged.size = comms[a].size + comms[b].size;
    merged.min_member = std::min(comms[a].min_member, comms[b].min_member);
    merged.node = node;
    merged.row.resize(n);
    for (int k = 0; k < n; ++k) {
      merged.row[k] = (comms[a].size * comms[a].row[k] +
                       comms[b].size * comms[b].row[k]) /
                      merged.size;
    }
    for (int c : {a, b}) {
      for (int nb : comms[c].neighbors) {
        if (nb != a && nb != b) {
          merged.neighbors.insert(nb);
          cost.erase(std::minmax(c, nb));
        }
      }
      comms[c].alive = false;
      comms[c].row.clear();
    }
    cost.erase(best->first);
    for (int nb : merged.neighbors) {
      comms[nb].neighbors.erase(a);
      comms[nb].neighbors.erase(b);
      comms[nb].neighbors.insert(id);
    }
    comms.push_back(std::move(merged));
    for (int nb : comms[id].neighbors) {
      cost[{nb, id}] = merge_cost(comms[nb], comms[id]);
    }
  }

  result.partition = cut_dendrogram(result.dendrogram, g);
  return result;
}

}  // namespace egomap
