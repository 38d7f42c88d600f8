#pragma once

#include <cstdint>

#include "egomap/graph.hpp"
#include "egomap/partition.hpp"

namespace egomap {

struct LouvainResult {
  Partition partition;
  PartitionQuality quality;
};

// Greedy modularity optimization: sweeps of single-vertex moves (visit order
// shuffled by seed) alternating with community aggregation, until a sweep
// makes no move. Each accepted move strictly raises Q, so the final Q is
// never below the singleton-start value. Ties between equally good target
// communities resolve toward the smaller community index.
LouvainResult louvain(const UndirectedGraph& g, std::uint64_t seed);

}  // namespace egomap
