#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "egomap/graph.hpp"

namespace egomap {

// Disjoint assignment of every vertex to exactly one non-empty community.
// Indices are canonical: communities are ordered by their lexicographically
// smallest member, so two partitions with the same grouping compare equal no
// matter how their input labels were numbered.
class Partition {
public:
  Partition() = default;

  static Partition from_assignment(const std::map<std::string, int>& assignment);
  static Partition from_communities(std::vector<std::vector<std::string>> groups);
  static Partition singletons(const std::vector<std::string>& ids);

  int community_count() const { return static_cast<int>(communities_.size()); }
  int community_of(const std::string& id) const;  // throws on unknown vertex
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  const std::vector<std::vector<std::string>>& communities() const {
    return communities_;
  }
  std::vector<std::string> vertices() const;  // sorted
  std::size_t vertex_count() const { return index_.size(); }

  bool operator==(const Partition& other) const {
    return communities_ == other.communities_;
  }

private:
  std::vector<std::vector<std::string>> communities_;  // sorted members
  std::map<std::string, int> index_;
};

struct PartitionQuality {
  double q = 0.0;
  std::vector<double> internal_edge_fraction;  // e_c / m, per community
  std::vector<double> expected_fraction;       // (d_c / 2m)^2, per community
};

// Closed-form modularity: Q = sum_c [ e_c/m - (d_c/2m)^2 ].
PartitionQuality modularity(const UndirectedGraph& g, const Partition& p);

// Monte-Carlo counterpart: actual internal-edge fraction minus the mean
// internal-edge fraction over `trials` degree-preserving random redraws of
// g's edges under the same partition. Deterministic for a fixed seed.
double modularity_monte_carlo(const UndirectedGraph& g, const Partition& p,
                              int trials, std::uint64_t seed);

}  // namespace egomap
