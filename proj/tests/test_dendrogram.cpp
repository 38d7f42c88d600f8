#include <doctest.h>

#include "egomap/dendrogram.hpp"
#include "egomap/error.hpp"

using namespace egomap;

namespace {

UndirectedGraph two_triangles() {
  return UndirectedGraph(
      {"a", "b", "c", "d", "e", "f"},
      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}});
}

// Merge each triangle internally, then the two triangles together.
Dendrogram two_triangle_dendrogram() {
  Dendrogram d;
  d.leaves = {"a", "b", "c", "d", "e", "f"};
  d.merges = {
      {0, 1, 1.0},  // node 6 = {a,b}
      {6, 2, 2.0},  // node 7 = {a,b,c}
      {3, 4, 3.0},  // node 8 = {d,e}
      {8, 5, 4.0},  // node 9 = {d,e,f}
      {7, 9, 5.0},  // node 10 = everything
  };
  return d;
}

}  // namespace

TEST_CASE("partition_at replays merges level by level") {
  auto d = two_triangle_dendrogram();
  CHECK(d.partition_at(0) ==
        Partition::singletons({"a", "b", "c", "d", "e", "f"}));
  CHECK(d.partition_at(2) ==
        Partition::from_communities({{"a", "b", "c"}, {"d"}, {"e"}, {"f"}}));
  CHECK(d.partition_at(5) ==
        Partition::from_communities({{"a", "b", "c", "d", "e", "f"}}));
  CHECK_THROWS_AS(d.partition_at(6), Error);
}

TEST_CASE("cut picks the max modularity level") {
  auto p = cut_dendrogram(two_triangle_dendrogram(), two_triangles());
  CHECK(p == Partition::from_communities({{"a", "b", "c"}, {"d", "e", "f"}}));
}

TEST_CASE("cut requires matching leaves") {
  UndirectedGraph g({"a", "b"}, {{"a", "b"}});
  Dendrogram d;
  d.leaves = {"a", "z"};
  CHECK_THROWS_WITH_AS(cut_dendrogram(d, g),
                       "dendrogram leaves do not match the graph's vertex set",
                       Error);
}

TEST_CASE("single-leaf dendrogram cuts to a singleton") {
  UndirectedGraph g({"a"}, {});
  Dendrogram d;
  d.leaves = {"a"};
  CHECK(cut_dendrogram(d, g) == Partition::singletons({"a"}));
}

TEST_CASE("equal-quality levels resolve to fewer communities") {
  // Path a-b: singleton cut and merged cut both score Q = -0.5 and 0.
  UndirectedGraph g({"a", "b"}, {{"a", "b"}});
  Dendrogram d;
  d.leaves = {"a", "b"};
  d.merges = {{0, 1, 1.0}};
  CHECK(cut_dendrogram(d, g) == Partition::from_communities({{"a", "b"}}));

  // On a 4-cycle both {ab|cd} and the single community score Q = 0; the
  // single community has fewer communities and must win the tie.
  UndirectedGraph cycle({"a", "b", "c", "d"},
                        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  Dendrogram paired;
  paired.leaves = {"a", "b", "c", "d"};
  paired.merges = {{0, 1, 1.0}, {2, 3, 1.0}, {4, 5, 2.0}};
  auto cut = cut_dendrogram(paired, cycle);
  CHECK(cut == Partition::from_communities({{"a", "b", "c", "d"}}));
}
