#pragma once

#include "egomap/dendrogram.hpp"
#include "egomap/graph.hpp"
#include "egomap/partition.hpp"

namespace egomap {

// Stopping rule for the divisive split history: either a target community
// count, or the maximum-modularity point of the whole history.
struct GnStop {
  enum class Kind { TargetK, BestModularity };

  Kind kind = Kind::BestModularity;
  int k = 1;

  static GnStop target(int k) { return {Kind::TargetK, k}; }
  static GnStop best_modularity() { return {Kind::BestModularity, 1}; }
};

struct DetectionResult {
  Dendrogram dendrogram;
  Partition partition;
};

// Repeatedly removes the edge with the highest betweenness, recomputing edge
// betweenness from scratch after every removal, and records each component
// split. The dendrogram covers the full split history down to singletons;
// the returned partition is the history entry selected by the stop rule.
DetectionResult girvan_newman(const UndirectedGraph& g, const GnStop& stop);

}  // namespace egomap
