// oracles.hpp
//
// Test-only reference implementations, deliberately independent of the
// library's search/pruning structures: distances by breadth-first
// search, feasibility by definition-driven prefix enumeration, window
// maxima by enumerate-all, periodic verification by a wide-window pair
// scan. Expected values in the test suites are frozen from these.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "packing/distance_graph.hpp"

namespace oracles {

// BFS over Z with steps {+-1, +-t} from 0, positions clamped to a range
// wide enough that leaving it never shortens a path.
inline std::vector<int> bfs_distances(int t, int max_n) {
  int margin = 2 * t + 2;
  int lo = -(max_n + margin), hi = max_n + margin;
  std::vector<int> dist(static_cast<size_t>(hi - lo + 1), -1);
  auto idx = [&](long long x) { return static_cast<size_t>(x - lo); };
  std::deque<long long> queue;
  dist[idx(0)] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    long long x = queue.front();
    queue.pop_front();
    for (long long step : {-1LL, 1LL, static_cast<long long>(-t), static_cast<long long>(t)}) {
      long long y = x + step;
      if (y < lo || y > hi || dist[idx(y)] >= 0) continue;
      dist[idx(y)] = dist[idx(x)] + 1;
      queue.push_back(y);
    }
  }
  std::vector<int> out(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out[static_cast<size_t>(n)] = dist[idx(n)];
  return out;
}

// definition-driven validity of a partial assignment: every same-color
// pair at graph distance <= color fails
inline bool placement_ok(const packing::DistanceSpec& spec, const std::vector<int>& colors,
                         int upto, int color) {
  for (int q = 0; q < upto; ++q) {
    if (colors[static_cast<size_t>(q)] != color) continue;
    if (packing::distance(spec, q, upto) <= color) return false;
  }
  return true;
}

// Enumerates colorings of positions 1..k_max (colors ascending at each
// position, prefixes only extended while valid) and reports the deepest
// total length reached; colorings of 1..k exist iff k <= result.
// fixed_first pins position 1. node_cap guards runaway trees.
inline int deepest_feasible(const packing::DistanceSpec& spec, int max_color, int k_max,
                            std::optional<int> fixed_first, uint64_t node_cap = 400'000'000) {
  std::vector<int> colors(static_cast<size_t>(k_max), 0);
  int deepest = 0;
  uint64_t nodes = 0;
  // iterative lexicographic enumeration with prefix skipping
  int pos = 0;
  int next_color = fixed_first ? *fixed_first : 1;
  while (true) {
    bool descended = false;
    for (int c = next_color; c <= max_color; ++c) {
      if (++nodes > node_cap) throw std::runtime_error("oracle: node cap exceeded");
      if (!placement_ok(spec, colors, pos, c)) continue;
      colors[static_cast<size_t>(pos)] = c;
      deepest = std::max(deepest, pos + 1);
      descended = true;
      break;
    }
    if (descended) {
      if (deepest == k_max) return k_max;
      ++pos;
      next_color = 1;
      continue;
    }
    // backtrack
    if (pos == 0) return deepest;
    --pos;
    if (pos == 0 && fixed_first) return deepest;  // pinned first position exhausted
    next_color = colors[static_cast<size_t>(pos)] + 1;
    colors[static_cast<size_t>(pos)] = 0;
  }
}

// Enumerate-all window maximum: every assignment of {0 (skip), 1..l} to m
// positions, validity checked from the definition, maximum colored count
// over valid totals. Prefixes are only extended while valid, which skips
// exactly the assignments whose own prefix is already invalid.
inline long long max_colorable_enumerated(const packing::DistanceSpec& spec, int l, int m) {
  std::vector<int> colors(static_cast<size_t>(m), 0);
  long long best = 0;
  // value order: skip first, then colors ascending
  auto recurse = [&](auto&& self, int pos, int colored) -> void {
    if (pos == m) {
      best = std::max<long long>(best, colored);
      return;
    }
    colors[static_cast<size_t>(pos)] = 0;
    self(self, pos + 1, colored);
    for (int c = 1; c <= l; ++c) {
      if (!placement_ok(spec, colors, pos, c)) continue;
      colors[static_cast<size_t>(pos)] = c;
      self(self, pos + 1, colored + 1);
      colors[static_cast<size_t>(pos)] = 0;
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

// Naive wide-window verification of a periodic word: all pairs within
// [0, 3p + cmax*t] checked directly from the definition.
inline bool naive_periodic_valid(const packing::DistanceSpec& spec, const std::vector<int>& word) {
  long long p = static_cast<long long>(word.size());
  int cmax = *std::max_element(word.begin(), word.end());
  long long range = 3 * p + static_cast<long long>(cmax) * spec.t;
  for (long long a = 0; a < range; ++a)
    for (long long b = a + 1; b <= range; ++b) {
      int va = word[static_cast<size_t>(a % p)];
      int vb = word[static_cast<size_t>(b % p)];
      if (va == vb && packing::distance(spec, a, b) <= va) return false;
    }
  return true;
}

}  // namespace oracles
