#pragma once

#include "egomap/partition.hpp"

namespace egomap {

struct SimilarityScores {
  double nmi = 0.0;  // in [0, 1]
  double ari = 0.0;  // at most 1
};

// Normalized mutual information (arithmetic-mean normalization) and adjusted
// Rand index over the contingency table. Both are symmetric and invariant
// under community relabeling. Degenerate 0/0 normalizations, which occur
// only when the two partitions are structurally identical, score 1.
SimilarityScores partition_similarity(const Partition& p, const Partition& truth);

}  // namespace egomap
