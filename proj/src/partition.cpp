#include "egomap/partition.hpp"

#include <algorithm>

#include "egomap/error.hpp"
#include "egomap/rng.hpp"

namespace egomap {

Partition Partition::from_assignment(const std::map<std::string, int>& assignment) {
  std::map<int, std::vector<std::string>> by_label;
  for (const auto& [id, label] : assignment) {
    by_label[label].push_back(id);  // ids arrive sorted from the map
  }
  std::vector<std::vector<std::string>> groups;
  groups.reserve(by_label.size());
  for (auto& [label, members] : by_label) {
    groups.push_back(std::move(members));
  }
  return from_communities(std::move(groups));
}

Partition Partition::from_communities(std::vector<std::vector<std::string>> groups) {
  for (auto& members : groups) {
    if (members.empty()) {
      throw Error(ErrorKind::InvalidInput, "empty community in partition");
    }
    std::sort(members.begin(), members.end());
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Partition p;
  p.communities_ = std::move(groups);
  for (std::size_t c = 0; c < p.communities_.size(); ++c) {
    for (const auto& id : p.communities_[c]) {
      if (!p.index_.emplace(id, static_cast<int>(c)).second) {
        throw Error(ErrorKind::InvalidInput,
                    "vertex assigned to more than one community: " + id);
      }
    }
  }
  return p;
}

Partition Partition::singletons(const std::vector<std::string>& ids) {
  std::vector<std::vector<std::string>> groups;
  groups.reserve(ids.size());
  for (const auto& id : ids) {
    groups.push_back({id});
  }
  return from_communities(std::move(groups));
}

int Partition::community_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorKind::InvalidInput, "vertex not in partition: " + id);
  }
  return it->second;
}

std::vector<std::string> Partition::vertices() const {
  std::vector<std::string> out;
  out.reserve(index_.size());
  for (const auto& [id, c] : index_) {
    out.push_back(id);
  }
  return out;
}

namespace {

void require_same_vertices(const UndirectedGraph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw Error(ErrorKind::InvalidInput,
                "partition does not cover the graph's vertex set");
  }
  for (const auto& id : g.vertex_ids()) {
    if (!p.contains(id)) {
      throw Error(ErrorKind::InvalidInput,
                  "partition does not cover the graph's vertex set");
    }
  }
}

}  // namespace

PartitionQuality modularity(const UndirectedGraph& g, const Partition& p) {
  if (g.edge_count() == 0) {
    throw Error(ErrorKind::UndefinedMetric,
                "modularity is undefined on a graph with no edges");
  }
  require_same_vertices(g, p);

  const int k = p.community_count();
  const double m = static_cast<double>(g.edge_count());
  std::vector<double> internal(k, 0.0);
  std::vector<double> degree_sum(k, 0.0);

  std::vector<int> comm(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    comm[v] = p.community_of(g.id_of(static_cast<int>(v)));
    degree_sum[comm[v]] += g.degree(static_cast<int>(v));
  }
  for (const auto& [i, j] : g.edge_list()) {
    if (comm[i] == comm[j]) {
      internal[comm[i]] += 1.0;
    }
  }

  PartitionQuality out;
  out.internal_edge_fraction.resize(k);
  out.expected_fraction.resize(k);
  for (int c = 0; c < k; ++c) {
    out.internal_edge_fraction[c] = internal[c] / m;
    double half = degree_sum[c] / (2.0 * m);
    out.expected_fraction[c] = half * half;
    out.q += out.internal_edge_fraction[c] - out.expected_fraction[c];
  }
  return out;
}

double modularity_monte_carlo(const UndirectedGraph& g, const Partition& p,
                              int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorKind::InvalidInput, "trials must be >= 1");
  }
  if (g.edge_count() == 0) {
    throw Error(ErrorKind::UndefinedMetric,
                "modularity is undefined on a graph with no edges");
  }
  require_same_vertices(g, p);

  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<int> comm(n);
  for (std::size_t v = 0; v < n; ++v) {
    comm[v] = p.community_of(g.id_of(static_cast<int>(v)));
  }

  double actual_internal = 0.0;
  for (const auto& [i, j] : g.edge_list()) {
    if (comm[i] == comm[j]) {
      actual_internal += 1.0;
    }
  }

  // Null model: each trial redraws both endpoints of every edge independently,
  // with probability proportional to vertex degree. Degrees are preserved in
  // expectation and the expected internal fraction per community is exactly
  // (d_c/2m)^2, the closed form modularity() subtracts.
  std::vector<int> stubs;
  stubs.reserve(2 * m);
  for (std::size_t v = 0; v < n; ++v) {
    for (int d = 0; d < g.degree(static_cast<int>(v)); ++d) {
      stubs.push_back(static_cast<int>(v));
    }
  }

  double fraction_sum = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = derive_stream(seed, static_cast<std::uint64_t>(trial));
    std::uint64_t internal = 0;
    for (std::size_t e = 0; e < m; ++e) {
      int u = stubs[rng.next_below(stubs.size())];
      int v = stubs[rng.next_below(stubs.size())];
      if (comm[u] == comm[v]) {
        ++internal;
      }
    }
    fraction_sum += static_cast<double>(internal) / static_cast<double>(m);
  }

  return actual_internal / static_cast<double>(m) -
         fraction_sum / static_cast<double>(trials);
}

}  // namespace egomap
