#include <algorithm>
#include <set>

#include "bfs_reference.hpp"
#include "doctest.h"
#include "radio/torus.hpp"

using radio::CycleOrder;
using radio::Diagonal;
using radio::TorusVertex;

TEST_CASE("cycle order validation") {
  CHECK(CycleOrder(1).value() == 1);
  CHECK(CycleOrder(7).half() == 3);
  CHECK(CycleOrder(8).half() == 4);
  CHECK(CycleOrder(8).is_even());
  CHECK_FALSE(CycleOrder(9).is_even());
  CHECK_THROWS_AS(CycleOrder(0), radio::UnsupportedOrderError);
  CHECK_THROWS_AS(CycleOrder(-3), radio::UnsupportedOrderError);
  CHECK_THROWS_AS(CycleOrder(50000), std::domain_error);
}

TEST_CASE("cycle distance") {
  CHECK(radio::cycle_distance(CycleOrder(5), 0, 0) == 0);
  CHECK(radio::cycle_distance(CycleOrder(5), 0, 3) == 2);
  CHECK(radio::cycle_distance(CycleOrder(4), 1, 3) == 2);
  CHECK(radio::cycle_distance(CycleOrder(2), 0, 1) == 1);

  CHECK_THROWS_AS(radio::cycle_distance(CycleOrder(5), 5, 0),
                  std::domain_error);
  CHECK_THROWS_AS(radio::cycle_distance(CycleOrder(5), 0, -1),
                  std::domain_error);
}

TEST_CASE("torus distance examples") {
  CHECK(radio::torus_distance(CycleOrder(4), {0, 0}, {0, 0}) == 0);
  CHECK(radio::torus_distance(CycleOrder(4), {0, 0}, {2, 2}) == 4);
  CHECK(radio::torus_distance(CycleOrder(5), {0, 0}, {3, 2}) == 4);

  // Vertices from a larger order are rejected for this n.
  CHECK_THROWS_AS(radio::torus_distance(CycleOrder(4), {0, 0}, {5, 1}),
                  std::domain_error);
}

TEST_CASE("diameter") {
  CHECK(radio::diameter(CycleOrder(1)) == 0);
  CHECK(radio::diameter(CycleOrder(3)) == 2);
  CHECK(radio::diameter(CycleOrder(4)) == 4);
  CHECK(radio::diameter(CycleOrder(25)) == 24);
}

TEST_CASE("all_vertices enumeration") {
  CHECK(radio::all_vertices(CycleOrder(1)) ==
        std::vector<TorusVertex>{{0, 0}});
  CHECK(radio::all_vertices(CycleOrder(2)) ==
        std::vector<TorusVertex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const auto vertices = radio::all_vertices(CycleOrder(3));
  CHECK(vertices.size() == 9);
  CHECK(std::set<TorusVertex>(vertices.begin(), vertices.end()).size() == 9);
}

TEST_CASE("diagonal membership") {
  CHECK(radio::diagonal_of(CycleOrder(5), {0, 0}) == Diagonal{0});
  CHECK(radio::diagonal_of(CycleOrder(5), {3, 2}) == Diagonal{1});
  CHECK(radio::diagonal_of(CycleOrder(5), {0, 4}) == Diagonal{1});
}

TEST_CASE("diagonals partition the vertex set") {
  for (int n = 1; n <= 12; ++n) {
    const CycleOrder order(n);
    std::vector<int> sizes(static_cast<size_t>(n), 0);
    for (const auto& v : radio::all_vertices(order)) {
      ++sizes[static_cast<size_t>(radio::diagonal_of(order, v).index)];
    }
    for (int size : sizes) CHECK(size == n);
  }
}

TEST_CASE("reduce_vertex wraps negative and large coordinates") {
  CHECK(radio::reduce_vertex(CycleOrder(5), -1, 7) == TorusVertex{4, 2});
  CHECK(radio::reduce_vertex(CycleOrder(5), 10, -10) == TorusVertex{0, 0});
}

TEST_CASE("vertex ids round trip") {
  const CycleOrder n(6);
  for (int id = 0; id < 36; ++id) {
    CHECK(radio::vertex_id(n, radio::vertex_from_id(n, id)) == id);
  }
  CHECK_THROWS_AS(radio::vertex_from_id(n, 36), std::domain_error);
}

TEST_CASE("closed-form distance equals BFS on explicit adjacency") {
  for (int n = 1; n <= 12; ++n) {
    const CycleOrder order(n);
    const auto adj = testutil::torus_adjacency(n);
    const radio::TorusMetric metric(order);
    int max_seen = 0;
    for (int u = 0; u < n * n; ++u) {
      const auto dist = testutil::bfs_distances(adj, u);
      for (int v = 0; v < n * n; ++v) {
        CHECK(metric.distance(u, v) == dist[static_cast<size_t>(v)]);
        max_seen = std::max(max_seen, dist[static_cast<size_t>(v)]);
      }
    }
    CHECK(max_seen == radio::diameter(order));
  }
}

TEST_CASE("metric is symmetric and satisfies the triangle inequality") {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8}) {
    const radio::TorusMetric metric{CycleOrder(n)};
    const int count = metric.vertex_count();
    for (int u = 0; u < count; ++u) {
      for (int v = u; v < count; ++v) {
        CHECK(metric.distance(u, v) == metric.distance(v, u));
        CHECK((metric.distance(u, v) == 0) == (u == v));
        for (int w = 0; w < count; ++w) {
          CHECK(metric.distance(u, v) <=
                metric.distance(u, w) + metric.distance(w, v));
        }
      }
    }
  }
}
