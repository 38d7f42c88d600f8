#include <doctest.h>

#include "egomap/baselines.hpp"
#include "egomap/error.hpp"
#include "egomap/rng.hpp"

using namespace egomap;

TEST_CASE("cf_recommend swaps the set differences") {
  InterestSet a{"a", {"1", "2", "3"}};
  InterestSet b{"b", {"2", "3", "4"}};
  auto recs = cf_recommend(a, b);
  CHECK(recs.for_a == std::set<std::string>{"4"});
  CHECK(recs.for_b == std::set<std::string>{"1"});
}

TEST_CASE("identical interests yield empty recommendations") {
  InterestSet a{"a", {"1", "2"}};
  InterestSet b{"b", {"1", "2"}};
  auto recs = cf_recommend(a, b);
  CHECK(recs.for_a.empty());
  CHECK(recs.for_b.empty());
}

TEST_CASE("no shared interests means no recommendation basis") {
  InterestSet a{"a", {"1"}};
  InterestSet b{"b", {"2"}};
  CHECK_THROWS_WITH_AS(cf_recommend(a, b),
                       "users share no interests, nothing to recommend",
                       Error);
}

TEST_CASE("cf_recommend properties hold under fuzzing") {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    InterestSet a{"a", {}}, b{"b", {}};
    std::string shared = std::to_string(rng.next_below(5));
    a.items.insert(shared);
    b.items.insert(shared);
    for (int i = 0; i < 8; ++i) {
      if (rng.next_unit() < 0.5) {
        a.items.insert(std::to_string(rng.next_below(20)));
      }
      if (rng.next_unit() < 0.5) {
        b.items.insert(std::to_string(rng.next_below(20)));
      }
    }
    auto recs = cf_recommend(a, b);
    for (const auto& item : recs.for_a) {
      CHECK(b.items.count(item) == 1);
      CHECK(a.items.count(item) == 0);
    }
    for (const auto& item : recs.for_b) {
      CHECK(a.items.count(item) == 1);
      CHECK(b.items.count(item) == 0);
    }
    // nothing from B\A is missing
    CHECK(recs.for_a.size() == b.items.size() -
                                   confusion_counts(a.items, b.items).tp);
  }
}

TEST_CASE("overlap_ratio follows the jaccard formula") {
  CHECK(overlap_ratio({"a", {"1", "2", "3"}}, {"b", {"2", "3", "4"}}) ==
        doctest::Approx(0.5));
  CHECK(overlap_ratio({"a", {"1"}}, {"b", {"1"}}) == doctest::Approx(1.0));
  CHECK(overlap_ratio({"a", {"1"}}, {"b", {"2"}}) == doctest::Approx(0.0));
  CHECK_THROWS_WITH_AS(overlap_ratio({"a", {}}, {"b", {}}),
                       "overlap of two empty interest sets is undefined",
                       Error);
}

TEST_CASE("precision and recall evaluate their formulas") {
  CHECK(precision({8, 2, 0}) == doctest::Approx(0.8));
  CHECK(precision({3, 0, 9}) == doctest::Approx(1.0));
  CHECK(recall({5, 0, 5}) == doctest::Approx(0.5));
  CHECK(recall({3, 9, 0}) == doctest::Approx(1.0));
}

TEST_CASE("zero-over-zero metrics raise instead of returning zero") {
  CHECK_THROWS_WITH_AS(precision({0, 0, 4}),
                       "precision is undefined with no positive guesses",
                       Error);
  CHECK_THROWS_WITH_AS(recall({0, 4, 0}),
                       "recall is undefined with no positive cases", Error);
}

TEST_CASE("confusion counts split predicted and truth") {
  auto c = confusion_counts({"x", "y"}, {"y", "z"});
  CHECK(c.tp == 1);
  CHECK(c.fp == 1);
  CHECK(c.fn == 1);

  c = confusion_counts({"x"}, {"x"});
  CHECK(c.fp == 0);
  CHECK(c.fn == 0);

  c = confusion_counts({}, {"z"});
  CHECK(c.tp == 0);
  CHECK(c.fp == 0);
  CHECK(c.fn == 1);
}

TEST_CASE("confusion identities hold for random sets") {
  Rng rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    std::set<std::string> predicted, truth;
    for (int i = 0; i < 12; ++i) {
      if (rng.next_unit() < 0.4) {
        predicted.insert(std::to_string(rng.next_below(15)));
      }
      if (rng.next_unit() < 0.4) {
        truth.insert(std::to_string(rng.next_below(15)));
      }
    }
    auto c = confusion_counts(predicted, truth);
    CHECK(c.tp + c.fp == predicted.size());
    CHECK(c.tp + c.fn == truth.size());
  }
}

TEST_CASE("matched confusion scores perfect recovery perfectly") {
  auto p = Partition::from_communities({{"a", "b"}, {"c", "d"}});
  auto c = matched_confusion(p, p);
  CHECK(c.tp == 4);
  CHECK(c.fp == 0);
  CHECK(c.fn == 0);
  CHECK(precision(c) == doctest::Approx(1.0));
}

TEST_CASE("matched confusion counts misplaced members") {
  auto truth = Partition::from_communities({{"a", "b", "c"}, {"d", "e", "f"}});
  auto pred = Partition::from_communities({{"a", "b", "d"}, {"c", "e", "f"}});
  auto c = matched_confusion(pred, truth);
  CHECK(c.tp == 4);  // two per matched pair
  CHECK(c.fp == 2);
  CHECK(c.fn == 2);
}

TEST_CASE("matched confusion requires matching vertex sets") {
  auto p = Partition::from_communities({{"a"}});
  auto t = Partition::from_communities({{"b"}});
  CHECK_THROWS_AS(matched_confusion(p, t), Error);
}
