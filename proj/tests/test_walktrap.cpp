#include <doctest.h>

#include <cmath>

#include "egomap/error.hpp"
#include "egomap/walktrap.hpp"

using namespace egomap;

namespace {

UndirectedGraph bridged_triangles() {
  return UndirectedGraph({"a", "b", "c", "d", "e", "f"},
                         {{"a", "b"},
                          {"b", "c"},
                          {"a", "c"},
                          {"d", "e"},
                          {"e", "f"},
                          {"d", "f"},
                          {"c", "d"}});
}

}  // namespace

TEST_CASE("walk distance is symmetric with a zero diagonal") {
  auto d = walk_distance(bridged_triangles(), 3);
  const int n = static_cast<int>(d.ids.size());
  for (int i = 0; i < n; ++i) {
    CHECK(d.at(i, i) == 0.0);
    for (int j = 0; j < n; ++j) {
      CHECK(d.at(i, j) == d.at(j, i));
      CHECK(d.at(i, j) >= 0.0);
    }
  }
}

TEST_CASE("structurally equivalent star leaves are indistinguishable") {
  UndirectedGraph star({"c", "l1", "l2", "l3"},
                       {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
  auto d = walk_distance(star, 1);
  CHECK(d.at("l1", "l2") == 0.0);
  CHECK(d.at("l1", "l3") == 0.0);
  CHECK(d.at("c", "l1") > 0.0);
}

TEST_CASE("path endpoints share a transition row at t=1") {
  UndirectedGraph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto d = walk_distance(path, 1);
  CHECK(d.at("a", "c") == 0.0);
  CHECK(d.at("a", "b") == doctest::Approx(1.0));  // hand-evaluated formula
}

TEST_CASE("walk distance validates t and degrees") {
  CHECK_THROWS_WITH_AS(walk_distance(bridged_triangles(), 0),
                       "walk length must be at least 1", Error);
  UndirectedGraph with_isolated({"a", "b", "z"}, {{"a", "b"}});
  CHECK_THROWS_WITH_AS(walk_distance(with_isolated, 2),
                       "walk distance is undefined on zero-degree vertex: z",
                       Error);
}

TEST_CASE("bridged double triangle resolves into the triangles") {
  auto result = walktrap(bridged_triangles(), 4);
  CHECK(result.partition ==
        Partition::from_communities({{"a", "b", "c"}, {"d", "e", "f"}}));
}

TEST_CASE("disconnected triangles stay separate communities") {
  UndirectedGraph g(
      {"a", "b", "c", "d", "e", "f"},
      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}});
  auto result = walktrap(g, 4);
  CHECK(result.partition ==
        Partition::from_communities({{"a", "b", "c"}, {"d", "e", "f"}}));
  // no forced cross-component merges: the dendrogram is a two-root forest
  CHECK(result.dendrogram.merges.size() == 4);
}

TEST_CASE("single triangle merges into one community") {
  UndirectedGraph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto result = walktrap(g, 4);
  CHECK(result.partition == Partition::from_communities({{"a", "b", "c"}}));
}

TEST_CASE("isolated vertices come back as singleton communities") {
  UndirectedGraph g({"a", "b", "c", "z"},
                    {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto result = walktrap(g, 2);
  CHECK(result.partition ==
        Partition::from_communities({{"a", "b", "c"}, {"z"}}));
  CHECK(result.dendrogram.leaves == g.vertex_ids());
}

TEST_CASE("walktrap needs an edge and a positive walk length") {
  UndirectedGraph edgeless({"a", "b"}, {});
  CHECK_THROWS_AS(walktrap(edgeless, 4), Error);
  CHECK_THROWS_AS(walktrap(bridged_triangles(), 0), Error);
}

TEST_CASE("dendrogram heights never decrease") {
  auto result = walktrap(bridged_triangles(), 4);
  double last = 0.0;
  for (const auto& merge : result.dendrogram.merges) {
    CHECK(merge.height >= last);
    last = merge.height;
  }
}
