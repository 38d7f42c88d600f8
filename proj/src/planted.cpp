#include "egomap/planted.hpp"

#include <cstdio>
#include <map>

#include "egomap/error.hpp"
#include "egomap/rng.hpp"

namespace egomap {

PlantedGraph planted_partition(int blocks, int block_size, double p_in,
                               double p_out, std::uint64_t seed) {
  if (blocks < 1 || block_size < 1) {
    throw Error(ErrorKind::InvalidInput,
                "blocks and block_size must be positive");
  }
  if (!(0.0 <= p_out && p_out <= p_in && p_in <= 1.0)) {
    throw Error(ErrorKind::InvalidInput,
                "probabilities must satisfy 0 <= p_out <= p_in <= 1");
  }

  const int n = blocks * block_size;
  std::vector<std::string> ids(n);
  for (int v = 0; v < n; ++v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "v%05d", v);
    ids[v] = buf;
  }

  Rng rng(seed);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double p = i / block_size == j / block_size ? p_in : p_out;
      if (rng.next_unit() < p) {
        edges.emplace_back(ids[i], ids[j]);
      }
    }
  }

  std::map<std::string, int> assignment;
  for (int v = 0; v < n; ++v) {
    assignment[ids[v]] = v / block_size;
  }

  PlantedGraph out;
  out.graph = UndirectedGraph(ids, edges);
  out.truth = Partition::from_assignment(assignment);
  out.params = {blocks, block_size, p_in, p_out, seed};
  return out;
}

}  // namespace egomap
