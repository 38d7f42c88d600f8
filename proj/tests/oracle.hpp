#pragma once

#include <map>
#include <string>
#include <utility>

#include "egomap/graph.hpp"
#include "egomap/rng.hpp"

namespace egomap::testing {

struct OracleScores {
  std::map<std::string, double> vertex_scores;
  std::map<std::pair<std::string, std::string>, double> edge_scores;
};

// Reference betweenness computed the slow way: materialize every shortest
// path of every vertex pair and count memberships. Usable up to a dozen or
// so vertices; exists to check the Brandes implementation against.
OracleScores oracle_betweenness(const UndirectedGraph& g);

// Spanning tree plus extra random edges; always connected. Vertex ids are
// single letters, so n is capped at 26.
UndirectedGraph random_connected_graph(Rng& rng, int n, int extra_edges);

// Independent edge coin flips with probability p.
UndirectedGraph random_gnp_graph(Rng& rng, int n, double p);

}  // namespace egomap::testing
