#include "egomap/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "egomap/error.hpp"

namespace egomap {

bool DirectedGraph::has_vertex(const std::string& id) const {
  return index_.count(id) != 0;
}

int DirectedGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

const VertexMeta& DirectedGraph::meta(const std::string& id) const {
  int i = index_of(id);
  if (i < 0) {
    throw Error(ErrorKind::InvalidInput, "unknown vertex id: " + id);
  }
  return meta_[i];
}

std::vector<std::string> DirectedGraph::out_neighbors(const std::string& id) const {
  int i = index_of(id);
  if (i < 0) {
    throw Error(ErrorKind::InvalidInput, "unknown vertex id: " + id);
  }
  std::vector<std::string> out;
  out.reserve(out_[i].size());
  for (int j : out_[i]) {
    out.push_back(ids_[j]);
  }
  return out;
}

std::vector<EdgeRecord> DirectedGraph::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (int j : out_[i]) {
      out.push_back({ids_[i], ids_[j]});
    }
  }
  return out;
}

DirectedGraph build_graph(const std::vector<VertexRecord>& vertices,
                          const std::vector<EdgeRecord>& edges) {
  // Last record wins for duplicate ids, mirroring metadata ingestion.
  std::map<std::string, VertexMeta> by_id;
  for (const auto& rec : vertices) {
    if (rec.id.empty()) {
      throw Error(ErrorKind::InvalidInput, "vertex id must be non-empty");
    }
    by_id[rec.id] = rec.meta;
  }

  DirectedGraph g;
  g.ids_.reserve(by_id.size());
  g.meta_.reserve(by_id.size());
  for (auto& [id, meta] : by_id) {
    g.index_.emplace(id, static_cast<int>(g.ids_.size()));
    g.ids_.push_back(id);
    g.meta_.push_back(std::move(meta));
  }
  g.out_.resize(g.ids_.size());

  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    int s = g.index_of(e.source);
    if (s < 0) {
      throw Error(ErrorKind::InvalidInput,
                  "edge references undeclared vertex: " + e.source);
    }
    int t = g.index_of(e.target);
    if (t < 0) {
      throw Error(ErrorKind::InvalidInput,
                  "edge references undeclared vertex: " + e.target);
    }
    if (s == t) {
      throw Error(ErrorKind::InvalidInput, "self-loop on vertex: " + e.source);
    }
    if (seen.emplace(s, t).second) {
      g.out_[s].push_back(t);
    }
  }
  for (auto& adj : g.out_) {
    std::sort(adj.begin(), adj.end());
  }
  g.edge_count_ = seen.size();
  return g;
}

DirectedGraph ego_graph(const DirectedGraph& g, const std::string& ego) {
  if (!g.has_vertex(ego)) {
    throw Error(ErrorKind::InvalidInput, "unknown ego id: " + ego);
  }
  auto nbrs = g.out_neighbors(ego);
  std::set<std::string> friends(nbrs.begin(), nbrs.end());

  std::vector<VertexRecord> vertices;
  vertices.reserve(friends.size());
  for (const auto& id : friends) {
    vertices.push_back({id, g.meta(id)});
  }
  std::vector<EdgeRecord> edges;
  for (const auto& id : friends) {
    for (const auto& to : g.out_neighbors(id)) {
      if (friends.count(to)) {
        edges.push_back({id, to});
      }
    }
  }
  return build_graph(vertices, edges);
}

UndirectedGraph::UndirectedGraph(
    std::vector<std::string> vertex_ids,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(vertex_ids.begin(), vertex_ids.end());
  vertex_ids.erase(std::unique(vertex_ids.begin(), vertex_ids.end()),
                   vertex_ids.end());
  ids_ = std::move(vertex_ids);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) {
      throw Error(ErrorKind::InvalidInput, "vertex id must be non-empty");
    }
    index_.emplace(ids_[i], static_cast<int>(i));
  }
  adj_.resize(ids_.size());

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) {
      throw Error(ErrorKind::InvalidInput,
                  "edge references undeclared vertex: " +
                      (ia == index_.end() ? a : b));
    }
    int i = ia->second, j = ib->second;
    if (i == j) {
      throw Error(ErrorKind::InvalidInput, "self-loop on vertex: " + a);
    }
    if (i > j) {
      std::swap(i, j);
    }
    if (seen.emplace(i, j).second) {
      adj_[i].push_back(j);
      adj_[j].push_back(i);
    }
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  m_ = seen.size();
}

bool UndirectedGraph::has_vertex(const std::string& id) const {
  return index_.count(id) != 0;
}

int UndirectedGraph::degree(const std::string& id) const {
  return degree(index_of(id));
}

int UndirectedGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorKind::InvalidInput, "unknown vertex id: " + id);
  }
  return it->second;
}

std::vector<std::pair<int, int>> UndirectedGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int i = 0; i < static_cast<int>(adj_.size()); ++i) {
    for (int j : adj_[i]) {
      if (i < j) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

UndirectedGraph undirected_projection(const DirectedGraph& g) {
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    pairs.emplace_back(e.source, e.target);
  }
  return UndirectedGraph(g.vertex_ids(), pairs);
}

PathCounts shortest_paths(const UndirectedGraph& g, const std::string& source) {
  int s = g.index_of(source);  // throws on unknown source
  const auto& adj = g.adjacency();
  const int n = static_cast<int>(g.vertex_count());

  std::vector<int> dist(n, -1);
  std::vector<std::uint64_t> sigma(n, 0);
  dist[s] = 0;
  sigma[s] = 1;
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
      if (dist[w] == dist[v] + 1) {
        sigma[w] += sigma[v];
      }
    }
  }

  PathCounts out;
  out.source = source;
  for (int v = 0; v < n; ++v) {
    if (dist[v] >= 0) {
      out.dist.emplace(g.id_of(v), dist[v]);
      out.sigma.emplace(g.id_of(v), sigma[v]);
    }
  }
  return out;
}

std::vector<int> connected_components(const UndirectedGraph& g) {
  const auto& adj = g.adjacency();
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) {
      continue;
    }
    comp[s] = next;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = next;
          queue.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace egomap
