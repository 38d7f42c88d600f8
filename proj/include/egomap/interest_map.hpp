#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egomap/graph.hpp"
#include "egomap/labeling.hpp"
#include "egomap/partition.hpp"

namespace egomap {

enum class Detector { GirvanNewman, Louvain, Walktrap };

const std::string& detector_name(Detector d);
Detector detector_from_name(const std::string& name);  // throws on unknown name

struct MapConfig {
  Detector detector = Detector::Louvain;
  int min_community_size = 3;
  int label_top_k = 5;
  int walk_length = 4;
  std::uint64_t seed = 0;

  void validate() const;  // throws when a field is out of range
};

struct InterestGroup {
  int community_id = 0;  // index in the detector's partition
  std::vector<std::string> members;  // sorted
  std::vector<LabelTerm> label_terms;

  std::size_t size() const { return members.size(); }
};

// The labeled communities of one ego network. Group members plus
// dropped_vertices tile the ego network's vertex set exactly.
struct InterestMap {
  std::string ego;
  Detector detector = Detector::Louvain;
  std::vector<InterestGroup> groups;          // descending size
  std::vector<std::string> dropped_vertices;  // sorted
};

struct FilterResult {
  std::vector<std::vector<std::string>> kept;  // original partition order
  std::vector<std::string> dropped;            // sorted
};

// Drops communities smaller than min_size, keeping the survivors' member
// sets unchanged.
FilterResult filter_communities(const Partition& p, int min_size);

// Runs the configured detector. An edgeless graph has no community signal
// at all, so it degrades to singletons instead of tripping the detectors'
// m >= 1 precondition.
Partition detect_communities(const UndirectedGraph& g, const MapConfig& cfg);

// ego_graph -> undirected_projection -> detector -> size filter -> TF-IDF
// labels. An ego who follows nobody yields a map with zero groups.
InterestMap build_interest_map(const DirectedGraph& g, const std::string& ego,
                               const MapConfig& cfg);

}  // namespace egomap
