#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "egomap/partition.hpp"

namespace egomap {

struct InterestSet {
  std::string owner;
  std::set<std::string> items;
};

struct Recommendations {
  std::set<std::string> for_a;  // B \ A
  std::set<std::string> for_b;  // A \ B
};

// Set-difference collaborative filtering. The two users must share at least
// one interest, otherwise there is no basis for a recommendation.
Recommendations cf_recommend(const InterestSet& a, const InterestSet& b);

// Jaccard overlap |A n B| / |A u B|; undefined when both sets are empty.
double overlap_ratio(const InterestSet& a, const InterestSet& b);

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
};

double precision(const ConfusionCounts& c);  // tp / (tp + fp)
double recall(const ConfusionCounts& c);     // tp / (tp + fn)

ConfusionCounts confusion_counts(const std::set<std::string>& predicted,
                                 const std::set<std::string>& truth);

// Membership-level confusion for a detected partition against planted truth.
// Predicted communities are paired with truth blocks greedily by largest
// overlap; a vertex counts as a true positive when its predicted community
// is paired with its truth block.
ConfusionCounts matched_confusion(const Partition& predicted,
                                  const Partition& truth);

}  // namespace egomap
