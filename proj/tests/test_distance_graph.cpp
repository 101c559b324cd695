#include <doctest.h>

#include "oracles.hpp"
#include "packing/distance_graph.hpp"

using namespace packing;

TEST_CASE("distance: pinned examples") {
  CHECK(distance(DistanceSpec(5), 0, 5) == 1);
  CHECK(distance(DistanceSpec(5), 0, 7) == 3);   // frozen from the BFS oracle
  CHECK(distance(DistanceSpec(6), 0, 3) == 3);   // frozen from the BFS oracle
  CHECK(distance(DistanceSpec(4), 10, 10) == 0);
  CHECK(distance(DistanceSpec(9), -3, 6) == 1);
}

TEST_CASE("distance: rejects t < 2") {
  CHECK_THROWS_AS(DistanceSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSpec(0), std::invalid_argument);
}

TEST_CASE("distance: closed form equals BFS oracle, t in [2,20], n <= 2000") {
  for (int t = 2; t <= 20; ++t) {
    DistanceSpec spec(t);
    auto bfs = oracles::bfs_distances(t, 2000);
    for (int n = 0; n <= 2000; ++n) {
      REQUIRE_MESSAGE(distance(spec, 0, n) == bfs[static_cast<size_t>(n)],
                      "t=" << t << " n=" << n);
    }
  }
}

TEST_CASE("distance: metric axioms on samples") {
  for (int t : {2, 5, 11, 20}) {
    DistanceSpec spec(t);
    for (long long a = -40; a <= 40; a += 7)
      for (long long b = -40; b <= 40; b += 5) {
        CHECK(distance(spec, a, b) == distance(spec, b, a));
        CHECK(distance(spec, a, a) == 0);
        for (long long c = -30; c <= 30; c += 11)
          CHECK(distance(spec, a, c) <= distance(spec, a, b) + distance(spec, b, c));
      }
  }
}

TEST_CASE("distance: lower bound ceil(n/t)") {
  for (int t : {2, 6, 13}) {
    DistanceSpec spec(t);
    for (long long n = 0; n <= 500; ++n)
      CHECK(distance(spec, 0, n) >= (n + t - 1) / t);
  }
}

TEST_CASE("forbidden_offsets: pinned examples") {
  CHECK(forbidden_offsets(DistanceSpec(5), 1).offsets() == std::vector<int>{1, 5});
  CHECK(forbidden_offsets(DistanceSpec(5), 2).offsets() == std::vector<int>{1, 2, 4, 5, 6, 10});
  CHECK(forbidden_offsets(DistanceSpec(2), 1).offsets() == std::vector<int>{1, 2});
}

TEST_CASE("forbidden_offsets: matches definition, monotone in color, bounded") {
  for (int t : {2, 4, 7}) {
    DistanceSpec spec(t);
    for (int v = 1; v <= 8; ++v) {
      ForbiddenOffsetSet f(spec, v);
      CHECK(f.span() == static_cast<long long>(v) * t);
      for (long long n = 1; n <= f.span(); ++n)
        CHECK(f.contains(n) == (distance(spec, 0, n) <= v));
      CHECK(!f.offsets().empty());
      CHECK(f.offsets().back() <= v * t);
      if (v > 1) {
        ForbiddenOffsetSet prev(spec, v - 1);
        for (int n : prev.offsets()) CHECK(f.contains(n));
      }
    }
  }
}

TEST_CASE("window_diameter: pinned examples") {
  CHECK(window_diameter(DistanceSpec(6), 3) == 2);
  CHECK(window_diameter(DistanceSpec(8), 4) == 3);
  CHECK(window_diameter(DistanceSpec(2), 1) == 0);
  CHECK(window_diameter(DistanceSpec(17), 1) == 0);
}

TEST_CASE("max_window_for_color: pinned examples and closed forms") {
  CHECK(max_window_for_color(DistanceSpec(6), 5) == 21);
  CHECK(max_window_for_color(DistanceSpec(8), 7) == 36);
  CHECK(max_window_for_color(DistanceSpec(6), 2) == 3);
  for (int i = 2; i <= 14; ++i)
    CHECK(max_window_for_color(DistanceSpec(6), i) == 6 * i - 9);
  for (int i = 3; i <= 14; ++i)
    CHECK(max_window_for_color(DistanceSpec(8), i) == 8 * i - 20);
}

TEST_CASE("max_window_for_color: definition check against window_diameter") {
  for (int t : {3, 6, 8}) {
    DistanceSpec spec(t);
    for (int v = 1; v <= 9; ++v) {
      long long m = max_window_for_color(spec, v);
      CHECK(window_diameter(spec, m) <= v);
      CHECK(window_diameter(spec, m + 1) > v);
    }
  }
}

TEST_CASE("grid_lower_bound: 15x9 embedding for t >= 9") {
  auto none = grid_lower_bound(DistanceSpec(8));
  CHECK(!none.has_value());

  for (int t : {9, 575}) {
    auto glb = grid_lower_bound(DistanceSpec(t));
    REQUIRE(glb.has_value());
    CHECK(glb->bound == 12);
    CHECK(glb->embedding.width == 15);
    CHECK(glb->embedding.height == 9);
    CHECK(glb->embedding.injective());
    CHECK(glb->embedding.adjacency_preserving());
  }

  // the t=9 map is (x,y) -> y + 9x
  auto glb = grid_lower_bound(DistanceSpec(9));
  CHECK(glb->embedding.map(2, 3) == 3 + 2 * 9);
}
