#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace egomap {

struct VertexMeta {
  std::string handle;
  std::string description;
  std::uint64_t follower_count = 0;
};

struct VertexRecord {
  std::string id;
  VertexMeta meta;
};

struct EdgeRecord {
  std::string source;
  std::string target;
};

// Directed follow graph with per-vertex profile metadata. Immutable once
// built. Vertex ids are stored sorted, so identical input records produce
// identical graphs regardless of record order.
class DirectedGraph {
public:
  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_vertex(const std::string& id) const;
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const VertexMeta& meta(const std::string& id) const;
  std::vector<std::string> out_neighbors(const std::string& id) const;
  std::vector<EdgeRecord> edges() const;  // sorted by (source, target)

private:
  friend DirectedGraph build_graph(const std::vector<VertexRecord>& vertices,
                                   const std::vector<EdgeRecord>& edges);

  int index_of(const std::string& id) const;  // -1 when absent

  std::vector<std::string> ids_;            // sorted
  std::vector<VertexMeta> meta_;            // parallel to ids_
  std::vector<std::vector<int>> out_;       // sorted adjacency, dense indices
  std::unordered_map<std::string, int> index_;
  std::size_t edge_count_ = 0;
};

// Simple undirected graph. Exposes both an id-based view and a dense-index
// view; the detectors work on indices and translate at the boundary.
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  // vertex_ids may include isolated vertices. Edges are unordered id pairs;
  // duplicates collapse, self-loops and unknown endpoints are rejected.
  UndirectedGraph(std::vector<std::string> vertex_ids,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return m_; }  // m
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  bool has_vertex(const std::string& id) const;
  int degree(const std::string& id) const;
  int degree(int index) const { return static_cast<int>(adj_[index].size()); }

  int index_of(const std::string& id) const;  // throws on unknown id
  const std::string& id_of(int index) const { return ids_[index]; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  std::vector<std::pair<int, int>> edge_list() const;  // i < j, sorted

private:
  std::vector<std::string> ids_;       // sorted
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::unordered_map<std::string, int> index_;
  std::size_t m_ = 0;
};

// Breadth-first distances and shortest-path multiplicities from one source.
// Vertices absent from the maps are unreachable.
struct PathCounts {
  std::string source;
  std::map<std::string, int> dist;
  std::map<std::string, std::uint64_t> sigma;

  bool reachable(const std::string& id) const { return dist.count(id) != 0; }
};

// Validates and assembles a DirectedGraph. Duplicate vertex records collapse
// (last one wins), duplicate edges collapse, self-loops and edges with
// undeclared endpoints are errors.
DirectedGraph build_graph(const std::vector<VertexRecord>& vertices,
                          const std::vector<EdgeRecord>& edges);

// Subgraph induced on ego's out-neighbors (the accounts ego follows). The ego
// vertex itself is excluded; all edges among the friends are retained.
DirectedGraph ego_graph(const DirectedGraph& g, const std::string& ego);

// Collapses direction: any pair connected by at least one directed edge
// becomes a single undirected edge.
UndirectedGraph undirected_projection(const DirectedGraph& g);

PathCounts shortest_paths(const UndirectedGraph& g, const std::string& source);

// Component index per vertex index; components numbered by smallest member.
std::vector<int> connected_components(const UndirectedGraph& g);

}  // namespace egomap
