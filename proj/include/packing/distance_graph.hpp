// distance_graph.hpp
//
// Exact metric and structural facts about the integer distance graph
// D(1,t): vertex set Z, edges between integers differing by 1 or by t.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace packing {

// The parameter t defining D(1,t). t = 1 would collapse the distance set
// to {1}, so t >= 2 is required.
struct DistanceSpec {
  int t;

  explicit DistanceSpec(int jump);
};

// Graph distance between a and b in D(1,t).
//
// Writing n = |a-b| and s for the number of t-steps taken toward the
// target, a path costs s + |n - s*t| (the residue is covered by 1-steps).
// The cost is decreasing in s while s*t <= n and increasing afterwards,
// so the scan over s in [0, ceil(n/t)] attains its minimum at
// floor(n/t) or ceil(n/t). Steps away from the target never help for
// n >= 0. Cross-checked against a BFS oracle in the tests.
int distance(const DistanceSpec& spec, long long a, long long b);

// All positive offsets n with distance(0,n) <= v, i.e. the differences at
// which two vertices of color v would violate the v-packing condition.
// Offsets are bounded by v*t since each step moves at most t. Stored as a
// dense bit vector for O(1) probes in search inner loops.
class ForbiddenOffsetSet {
 public:
  ForbiddenOffsetSet(const DistanceSpec& spec, int color);

  bool contains(long long n) const {
    return n >= 1 && n <= span_ &&
           (bits_[static_cast<size_t>(n >> 6)] >> (n & 63)) & 1;
  }

  int color() const { return color_; }
  long long span() const { return span_; }  // = color * t
  const std::vector<int>& offsets() const { return offsets_; }

 private:
  int color_;
  long long span_;
  std::vector<uint64_t> bits_;
  std::vector<int> offsets_;
};

ForbiddenOffsetSet forbidden_offsets(const DistanceSpec& spec, int color);

// Host-metric diameter of any m consecutive integers: the maximum of
// distance(0,n) over 1 <= n <= m-1, and 0 for m = 1.
int window_diameter(const DistanceSpec& spec, long long m);

// Largest m such that window_diameter(spec, m) <= v; in any packing
// coloring at most one vertex per m-window carries color v.
long long max_window_for_color(const DistanceSpec& spec, int v);

// Axis-aligned embedding of a finite square grid into D(1,t):
// (x,y) -> y + x*t with x in [0,width) along t-steps and y in [0,height)
// along 1-steps. Injective and adjacency-preserving when height <= t.
struct GridEmbedding {
  DistanceSpec spec;
  int width;
  int height;

  long long map(int x, int y) const {
    return static_cast<long long>(y) + static_cast<long long>(x) * spec.t;
  }

  bool injective() const;
  bool adjacency_preserving() const;
};

// Known lower bound for the packing chromatic number of the square
// lattice, imported as an external constant (not re-proved here).
inline constexpr int kSquareLatticeLowerBound = 12;
inline constexpr int kGridWidth = 15;   // extent along t-steps
inline constexpr int kGridHeight = 9;   // extent along 1-steps

struct GridLowerBound {
  int bound;
  GridEmbedding embedding;
};

// For t >= 9 the 15x9 square grid embeds in D(1,t), which transfers the
// square-lattice bound: returns 12 with the verified embedding. For
// t < 9 no bound is produced.
std::optional<GridLowerBound> grid_lower_bound(const DistanceSpec& spec);

}  // namespace packing
