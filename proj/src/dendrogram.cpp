#include "egomap/dendrogram.hpp"

#include <map>
#include <numeric>

#include "egomap/error.hpp"

namespace egomap {

Partition Dendrogram::partition_at(std::size_t level) const {
  if (level > merges.size()) {
    throw Error(ErrorKind::InvalidInput, "dendrogram level out of range");
  }
  const std::size_t n = leaves.size();
  // root[node] chases each node to the top of its subtree at this level.
  std::vector<int> root(n + level);
  std::iota(root.begin(), root.end(), 0);
  for (std::size_t j = 0; j < level; ++j) {
    const auto& merge = merges[j];
    root[merge.left] = static_cast<int>(n + j);
    root[merge.right] = static_cast<int>(n + j);
  }
  auto resolve = [&](int node) {
    while (root[node] != node) {
      node = root[node];
    }
    return node;
  };

  std::map<int, std::vector<std::string>> groups;
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    groups[resolve(static_cast<int>(leaf))].push_back(leaves[leaf]);
  }
  std::vector<std::vector<std::string>> communities;
  communities.reserve(groups.size());
  for (auto& [node, members] : groups) {
    communities.push_back(std::move(members));
  }
  return Partition::from_communities(std::move(communities));
}

Partition cut_dendrogram(const Dendrogram& d, const UndirectedGraph& g) {
  if (d.leaves != g.vertex_ids()) {
    throw Error(ErrorKind::InvalidInput,
                "dendrogram leaves do not match the graph's vertex set");
  }
  if (d.merges.empty()) {
    return d.partition_at(0);
  }

  Partition best = d.partition_at(0);
  double best_q = modularity(g, best).q;
  for (std::size_t level = 1; level <= d.merges.size(); ++level) {
    Partition candidate = d.partition_at(level);
    double q = modularity(g, candidate).q;
    // >= so that equal-quality cuts favor fewer communities.
    if (q >= best_q) {
      best_q = q;
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace egomap
