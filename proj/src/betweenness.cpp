#include "egomap/betweenness.hpp"

#include <queue>
#include <vector>

#include "egomap/error.hpp"

namespace egomap {

namespace {

// Shortest-path DAG from one source: BFS order, predecessor lists and path
// multiplicities, shared by the vertex and edge accumulations.
struct SourcePass {
  std::vector<int> order;  // BFS visit order
  std::vector<std::vector<int>> preds;
  std::vector<double> sigma;
  std::vector<int> dist;
};

SourcePass bfs_pass(const std::vector<std::vector<int>>& adj, int s) {
  const int n = static_cast<int>(adj.size());
  SourcePass pass;
  pass.preds.resize(n);
  pass.sigma.assign(n, 0.0);
  pass.dist.assign(n, -1);
  pass.sigma[s] = 1.0;
  pass.dist[s] = 0;
  std::queue<int> queue;
  queue.push(s);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    pass.order.push_back(v);
    for (int w : adj[v]) {
      if (pass.dist[w] < 0) {
        pass.dist[w] = pass.dist[v] + 1;
        queue.push(w);
      }
      if (pass.dist[w] == pass.dist[v] + 1) {
        pass.sigma[w] += pass.sigma[v];
        pass.preds[w].push_back(v);
      }
    }
  }
  return pass;
}

}  // namespace

BetweennessScores betweenness_scores(const UndirectedGraph& g) {
  const auto& adj = g.adjacency();
  const int n = static_cast<int>(g.vertex_count());
  std::vector<double> vertex(n, 0.0);
  std::map<std::pair<int, int>, double> edge;

  for (int s = 0; s < n; ++s) {
    SourcePass pass = bfs_pass(adj, s);
    std::vector<double> delta(n, 0.0);
    for (auto it = pass.order.rbegin(); it != pass.order.rend(); ++it) {
      int w = *it;
      for (int v : pass.preds[w]) {
        double c = pass.sigma[v] / pass.sigma[w] * (1.0 + delta[w]);
        edge[std::minmax(v, w)] += c;
        delta[v] += c;
      }
      if (w != s) {
        vertex[w] += delta[w];
      }
    }
  }

  // The source loop counts each unordered pair from both endpoints.
  BetweennessScores out;
  for (int v = 0; v < n; ++v) {
    out.vertex_scores.emplace(g.id_of(v), vertex[v] / 2.0);
  }
  for (const auto& [key, score] : edge) {
    out.edge_scores.emplace(std::make_pair(g.id_of(key.first), g.id_of(key.second)),
                            score / 2.0);
  }
  return out;
}

BetweennessScores vertex_betweenness(const UndirectedGraph& g) {
  return betweenness_scores(g);
}

BetweennessScores edge_betweenness(const UndirectedGraph& g) {
  return betweenness_scores(g);
}

PairDependency pair_dependency(const UndirectedGraph& g, const std::string& a,
                               const std::string& b, const std::string& through) {
  if (a == b || a == through || b == through) {
    throw Error(ErrorKind::InvalidInput,
                "pair dependency requires three distinct vertices");
  }
  PathCounts from_a = shortest_paths(g, a);
  if (!from_a.reachable(b)) {
    throw Error(ErrorKind::InvalidInput, "no path between " + a + " and " + b);
  }
  PairDependency out{a, b, through, 0.0};
  if (!from_a.reachable(through)) {
    return out;
  }
  PathCounts from_v = shortest_paths(g, through);
  if (from_a.dist.at(through) + from_v.dist.at(b) != from_a.dist.at(b)) {
    return out;
  }
  out.value = static_cast<double>(from_a.sigma.at(through)) *
              static_cast<double>(from_v.sigma.at(b)) /
              static_cast<double>(from_a.sigma.at(b));
  return out;
}

}  // namespace egomap
