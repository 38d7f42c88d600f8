#pragma once

#include <string>
#include <vector>

#include "egomap/dendrogram.hpp"
#include "egomap/girvan_newman.hpp"
#include "egomap/graph.hpp"

namespace egomap {

// Pairwise random-walk distances at a fixed walk length. Dense symmetric
// matrix with a zero diagonal over the listed ids.
struct WalkDistance {
  int t = 0;
  std::vector<std::string> ids;  // sorted
  std::vector<double> values;    // row-major, ids.size() squared

  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * ids.size() + j];
  }
  double at(const std::string& a, const std::string& b) const;
};

// r(i,j) = sqrt( sum_k (P^t_ik - P^t_jk)^2 / degree(k) ) where P is the
// uniform random-walk transition matrix. Zero-degree vertices have no
// transition row, so the graph must not contain any.
WalkDistance walk_distance(const UndirectedGraph& g, int t);

// Agglomerative detection over short random walks: starting from singleton
// communities, repeatedly merges the adjacent pair with the smallest Ward
// increase in within-community squared walk distance. Merging never crosses
// components, so the dendrogram is a forest on disconnected inputs; isolated
// vertices stay unmerged leaves. The flat partition is the dendrogram cut
// maximizing modularity.
DetectionResult walktrap(const UndirectedGraph& g, int t);

}  // namespace egomap
