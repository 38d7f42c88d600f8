#pragma once

#include <map>
#include <string>
#include <utility>

#include "egomap/graph.hpp"

namespace egomap {

// Fraction of shortest a-b paths that pass through one interior vertex.
struct PairDependency {
  std::string a;
  std::string b;
  std::string through;
  double value = 0.0;  // in [0, 1]
};

struct BetweennessScores {
  std::map<std::string, double> vertex_scores;
  // Keyed by the unordered pair (min id, max id).
  std::map<std::pair<std::string, std::string>, double> edge_scores;
};

// One accumulation pass per source vertex; each unordered pair {a,b} counts
// once. Vertex scores exclude the endpoints of the pair; edge scores include
// the pair made of the edge's own endpoints.
BetweennessScores betweenness_scores(const UndirectedGraph& g);

BetweennessScores vertex_betweenness(const UndirectedGraph& g);
BetweennessScores edge_betweenness(const UndirectedGraph& g);

PairDependency pair_dependency(const UndirectedGraph& g, const std::string& a,
                               const std::string& b, const std::string& through);

}  // namespace egomap
