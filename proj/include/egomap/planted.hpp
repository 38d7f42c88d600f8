#pragma once

#include <cstdint>

#include "egomap/graph.hpp"
#include "egomap/partition.hpp"

namespace egomap {

struct PlantedParams {
  int blocks = 0;
  int block_size = 0;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
};

struct PlantedGraph {
  UndirectedGraph graph;
  Partition truth;
  PlantedParams params;
};

// Independent Bernoulli edges: p_in inside a block, p_out across blocks.
// Every vertex pair consumes exactly one draw from the seeded generator, so
// a seed replays to a bit-identical graph on any platform.
PlantedGraph planted_partition(int blocks, int block_size, double p_in,
                               double p_out, std::uint64_t seed);

}  // namespace egomap
