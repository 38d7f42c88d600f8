#include "oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

namespace egomap::testing {

namespace {

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int s) {
  std::vector<int> dist(adj.size(), -1);
  dist[s] = 0;
  std::queue<int> queue;
  queue.push(s);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

// All shortest s-t paths as explicit vertex sequences, built by walking
// forward along strictly distance-increasing edges.
void enumerate_paths(const std::vector<std::vector<int>>& adj,
                     const std::vector<int>& dist, int t,
                     std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  int v = prefix.back();
  if (v == t) {
    out.push_back(prefix);
    return;
  }
  for (int w : adj[v]) {
    if (dist[w] == dist[v] + 1 && dist[t] >= dist[w]) {
      prefix.push_back(w);
      enumerate_paths(adj, dist, t, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

OracleScores oracle_betweenness(const UndirectedGraph& g) {
  const auto& adj = g.adjacency();
  const int n = static_cast<int>(g.vertex_count());

  OracleScores scores;
  for (int v = 0; v < n; ++v) {
    scores.vertex_scores[g.id_of(v)] = 0.0;
  }
  for (const auto& [i, j] : g.edge_list()) {
    scores.edge_scores[{g.id_of(i), g.id_of(j)}] = 0.0;
  }

  for (int s = 0; s < n; ++s) {
    auto dist = bfs_dist(adj, s);
    for (int t = s + 1; t < n; ++t) {
      if (dist[t] < 0) {
        continue;
      }
      std::vector<std::vector<int>> paths;
      std::vector<int> prefix{s};
      enumerate_paths(adj, dist, t, prefix, paths);
      double total = static_cast<double>(paths.size());
      for (const auto& path : paths) {
        for (std::size_t k = 1; k + 1 < path.size(); ++k) {
          scores.vertex_scores[g.id_of(path[k])] += 1.0 / total;
        }
        for (std::size_t k = 1; k < path.size(); ++k) {
          auto [a, b] = std::minmax(path[k - 1], path[k]);
          scores.edge_scores[{g.id_of(a), g.id_of(b)}] += 1.0 / total;
        }
      }
    }
  }
  return scores;
}

UndirectedGraph random_connected_graph(Rng& rng, int n, int extra_edges) {
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = std::string(1, static_cast<char>('a' + i));
  }

  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int j = static_cast<int>(rng.next_below(i));
    edges.emplace(j, i);
  }
  for (int tries = 0; tries < extra_edges * 4 &&
                      static_cast<int>(edges.size()) < n - 1 + extra_edges;
       ++tries) {
    int i = static_cast<int>(rng.next_below(n));
    int j = static_cast<int>(rng.next_below(n));
    if (i != j) {
      edges.insert(std::minmax(i, j));
    }
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [i, j] : edges) {
    pairs.emplace_back(ids[i], ids[j]);
  }
  return UndirectedGraph(ids, pairs);
}

UndirectedGraph random_gnp_graph(Rng& rng, int n, double p) {
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = std::string(1, static_cast<char>('a' + i));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_unit() < p) {
        pairs.emplace_back(ids[i], ids[j]);
      }
    }
  }
  return UndirectedGraph(ids, pairs);
}

}  // namespace egomap::testing
