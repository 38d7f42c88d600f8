#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "egomap/partition.hpp"

namespace egomap {

// Binary merge forest recording a hierarchical clustering. Leaf i is node i,
// following the sorted order of `leaves`; merge j creates node
// leaves.size() + j. Disconnected inputs leave multiple roots.
struct DendrogramMerge {
  int left;
  int right;
  double height;
};

struct Dendrogram {
  std::vector<std::string> leaves;      // sorted vertex ids
  std::vector<DendrogramMerge> merges;  // chronological, heights nondecreasing
                                        // along any root path

  // Partition after applying the first `level` merges to the singleton state.
  Partition partition_at(std::size_t level) const;
};

// Evaluates modularity at every merge level and returns the best one; ties
// resolve toward fewer communities. The dendrogram's leaves must equal g's
// vertex set. A dendrogram with no merges returns its only level unscored.
Partition cut_dendrogram(const Dendrogram& d, const UndirectedGraph& g);

}  // namespace egomap
