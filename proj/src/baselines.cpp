#include "egomap/baselines.hpp"

#include <algorithm>
#include <vector>

#include "egomap/error.hpp"

namespace egomap {

namespace {

std::set<std::string> difference(const std::set<std::string>& a,
                                 const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

std::size_t intersection_size(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const auto& item : a) {
    if (b.count(item)) {
      ++n;
    }
  }
  return n;
}

}  // namespace

Recommendations cf_recommend(const InterestSet& a, const InterestSet& b) {
  if (intersection_size(a.items, b.items) == 0) {
    throw Error(ErrorKind::InvalidInput,
                "users share no interests, nothing to recommend");
  }
  return {difference(b.items, a.items), difference(a.items, b.items)};
}

double overlap_ratio(const InterestSet& a, const InterestSet& b) {
  std::size_t inter = intersection_size(a.items, b.items);
  std::size_t uni = a.items.size() + b.items.size() - inter;
  if (uni == 0) {
    throw Error(ErrorKind::InvalidInput,
                "overlap of two empty interest sets is undefined");
  }
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double precision(const ConfusionCounts& c) {
  if (c.tp + c.fp == 0) {
    throw Error(ErrorKind::UndefinedMetric,
                "precision is undefined with no positive guesses");
  }
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

double recall(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0) {
    throw Error(ErrorKind::UndefinedMetric,
                "recall is undefined with no positive cases");
  }
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

ConfusionCounts confusion_counts(const std::set<std::string>& predicted,
                                 const std::set<std::string>& truth) {
  ConfusionCounts c;
  c.tp = intersection_size(predicted, truth);
  c.fp = predicted.size() - c.tp;
  c.fn = truth.size() - c.tp;
  return c;
}

ConfusionCounts matched_confusion(const Partition& predicted,
                                  const Partition& truth) {
  if (predicted.vertices() != truth.vertices()) {
    throw Error(ErrorKind::InvalidInput,
                "partitions cover different vertex sets");
  }

  const auto& pred = predicted.communities();
  const auto& blocks = truth.communities();
  std::vector<std::vector<std::size_t>> overlap(
      pred.size(), std::vector<std::size_t>(blocks.size(), 0));
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (const auto& id : pred[i]) {
      overlap[i][truth.community_of(id)] += 1;
    }
  }

  // Greedy pairing by largest overlap; ties take the smallest index pair.
  std::vector<bool> pred_used(pred.size(), false);
  std::vector<bool> block_used(blocks.size(), false);
  std::uint64_t tp = 0;
  std::size_t rounds = std::min(pred.size(), blocks.size());
  for (std::size_t round = 0; round < rounds; ++round) {
    std::size_t best_i = 0, best_j = 0, best = 0;
    bool found = false;
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (pred_used[i]) {
        continue;
      }
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (block_used[j] || overlap[i][j] <= best) {
          continue;
        }
        best = overlap[i][j];
        best_i = i;
        best_j = j;
        found = true;
      }
    }
    if (!found) {
      break;
    }
    pred_used[best_i] = true;
    block_used[best_j] = true;
    tp += best;
  }

  std::uint64_t n = predicted.vertex_count();
  return {tp, n - tp, n - tp};
}

}  // namespace egomap
