#include "egomap/girvan_newman.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "egomap/betweenness.hpp"
#include "egomap/error.hpp"

namespace egomap {

namespace {

// Edge betweenness over a mutable adjacency copy; same accumulation as
// betweenness_scores but on dense indices, halved for unordered pairs.
std::map<std::pair<int, int>, double> edge_scores(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::map<std::pair<int, int>, double> scores;
  for (int s = 0; s < n; ++s) {
    std::vector<int> order;
    std::vector<std::vector<int>> preds(n);
    std::vector<double> sigma(n, 0.0);
    std::vector<int> dist(n, -1);
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      order.push_back(v);
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : preds[w]) {
        double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        scores[std::minmax(v, w)] += c;
        delta[v] += c;
      }
    }
  }
  for (auto& [key, score] : scores) {
    score /= 2.0;
  }
  return scores;
}

bool same_component(const std::vector<std::vector<int>>& adj, int a, int b) {
  std::vector<char> seen(adj.size(), 0);
  std::queue<int> queue;
  queue.push(a);
  seen[a] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    if (v == b) {
      return true;
    }
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  return false;
}

std::vector<int> members_of(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> out;
  std::queue<int> queue;
  queue.push(start);
  seen[start] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    out.push_back(v);
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  return out;
}

void remove_edge(std::vector<std::vector<int>>& adj, int a, int b) {
  auto drop = [&](int u, int v) {
    auto& nbrs = adj[u];
    nbrs.erase(std::find(nbrs.begin(), nbrs.end(), v));
  };
  drop(a, b);
  drop(b, a);
}

}  // namespace

DetectionResult girvan_newman(const UndirectedGraph& g, const GnStop& stop) {
  const int n = static_cast<int>(g.vertex_count());
  if (stop.kind == GnStop::Kind::TargetK &&
      (stop.k < 1 || stop.k > n)) {
    throw Error(ErrorKind::InvalidInput,
                "target community count must be between 1 and the vertex count");
  }
  if (n == 0) {
    throw Error(ErrorKind::InvalidInput, "graph has no vertices");
  }
  if (stop.kind == GnStop::Kind::BestModularity && g.edge_count() == 0) {
    throw Error(ErrorKind::UndefinedMetric,
                "modularity stop rule needs a graph with edges");
  }

  std::vector<std::vector<int>> adj = g.adjacency();

  // Components are tracked with frozen ids: initial components get one each,
  // every split mints two more. Splits reversed later become the merge tree.
  std::vector<int> comp_of(n, -1);  // vertex -> frozen component id
  int next_comp = 0;
  struct Split {
    int parent;
    int child_a;
    int child_b;
  };
  std::vector<Split> splits;

  for (int v = 0; v < n; ++v) {
    if (comp_of[v] >= 0) {
      continue;
    }
    for (int u : members_of(adj, v)) {
      comp_of[u] = next_comp;
    }
    ++next_comp;
  }
  const int initial_components = next_comp;

  // History of visited partitions: component count c0, c0+1, ..., n.
  std::vector<std::vector<int>> history;
  history.push_back(comp_of);

  std::size_t edges_left = g.edge_count();
  while (edges_left > 0) {
    auto scores = edge_scores(adj);
    // Highest score wins; map order makes ties lexicographic by index pair.
    std::pair<int, int> cut = scores.begin()->first;
    double best = scores.begin()->second;
    for (const auto& [key, score] : scores) {
      if (score > best) {
        best = score;
        cut = key;
      }
    }
    remove_edge(adj, cut.first, cut.second);
    --edges_left;

    if (!same_component(adj, cut.first, cut.second)) {
      int parent = comp_of[cut.first];
      int child_a = next_comp++;
      int child_b = next_comp++;
      for (int u : members_of(adj, cut.first)) {
        comp_of[u] = child_a;
      }
      for (int u : members_of(adj, cut.second)) {
        comp_of[u] = child_b;
      }
      splits.push_back({parent, child_a, child_b});
      history.push_back(comp_of);
    }
  }

  // Reverse the splits into merges. Final singleton components are the
  // leaves; a child split later in time has already produced its node by the
  // time its parent's merge is emitted.
  DetectionResult result;
  result.dendrogram.leaves = g.vertex_ids();
  std::vector<int> node_of(next_comp, -1);
  for (int v = 0; v < n; ++v) {
    node_of[comp_of[v]] = v;  // comp_of is now all-singletons
  }
  for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
    int node = n + static_cast<int>(result.dendrogram.merges.size());
    double height = static_cast<double>(result.dendrogram.merges.size() + 1);
    result.dendrogram.merges.push_back(
        {node_of[it->child_a], node_of[it->child_b], height});
    node_of[it->parent] = node;
  }

  auto to_partition = [&](const std::vector<int>& comps) {
    std::map<std::string, int> assignment;
    for (int v = 0; v < n; ++v) {
      assignment[g.id_of(v)] = comps[v];
    }
    return Partition::from_assignment(assignment);
  };

  if (stop.kind == GnStop::Kind::TargetK) {
    // The divisive pass cannot merge anything, so a target at or below the
    // initial component count yields the coarsest visited partition.
    std::size_t index =
        stop.k <= initial_components
            ? 0
            : static_cast<std::size_t>(stop.k - initial_components);
    result.partition = to_partition(history[index]);
  } else {
    std::size_t best_index = 0;
    double best_q = modularity(g, to_partition(history[0])).q;
    for (std::size_t i = 1; i < history.size(); ++i) {
      double q = modularity(g, to_partition(history[i])).q;
      if (q > best_q) {  // strict: ties keep the earlier, coarser entry
        best_q = q;
        best_index = i;
      }
    }
    result.partition = to_partition(history[best_index]);
  }
  return result;
}

}  // namespace egomap
