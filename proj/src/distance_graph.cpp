#include "packing/distance_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace packing {

DistanceSpec::DistanceSpec(int jump) : t(jump) {
  if (t < 2) throw std::invalid_argument("DistanceSpec: t must be >= 2, got " + std::to_string(jump));
}

int distance(const DistanceSpec& spec, long long a, long long b) {
  long long n = a < b ? b - a : a - b;
  if (n == 0) return 0;
  long long t = spec.t;
  long long lo = n / t;                 // cost n - lo*(t-1), decreasing up to here
  long long hi = lo + (n % t ? 1 : 0);  // cost hi*(t+1) - n, increasing from here
  long long best = lo + (n - lo * t);
  if (hi != lo) best = std::min(best, hi + (hi * t - n));
  return static_cast<int>(best);
}

ForbiddenOffsetSet::ForbiddenOffsetSet(const DistanceSpec& spec, int color)
    : color_(color), span_(static_cast<long long>(color) * spec.t) {
  if (color < 1) throw std::invalid_argument("ForbiddenOffsetSet: color must be >= 1");
  bits_.assign(static_cast<size_t>(span_ / 64 + 1), 0);
  for (long long n = 1; n <= span_; ++n) {
    if (distance(spec, 0, n) <= color) {
      bits_[static_cast<size_t>(n >> 6)] |= uint64_t{1} << (n & 63);
      offsets_.push_back(static_cast<int>(n));
    }
  }
}

ForbiddenOffsetSet forbidden_offsets(const DistanceSpec& spec, int color) {
  return ForbiddenOffsetSet(spec, color);
}

int window_diameter(const DistanceSpec& spec, long long m) {
  if (m < 1) throw std::invalid_argument("window_diameter: m must be >= 1");
  int diam = 0;
  for (long long n = 1; n < m; ++n) diam = std::max(diam, distance(spec, 0, n));
  return diam;
}

long long max_window_for_color(const DistanceSpec& spec, int v) {
  if (v < 1) throw std::invalid_argument("max_window_for_color: v must be >= 1");
  // distance(0,n) >= ceil(n/t), so the scan stops by n = v*t + 1
  int diam = 0;
  for (long long m = 2;; ++m) {
    diam = std::max(diam, distance(spec, 0, m - 1));
    if (diam > v) return m - 1;
  }
}

bool GridEmbedding::injective() const {
  std::set<long long> seen;
  for (int x = 0; x < width; ++x)
    for (int y = 0; y < height; ++y)
      if (!seen.insert(map(x, y)).second) return false;
  return true;
}

bool GridEmbedding::adjacency_preserving() const {
  for (int x = 0; x < width; ++x)
    for (int y = 0; y < height; ++y) {
      if (x + 1 < width) {
        long long d = map(x + 1, y) - map(x, y);
        if (d != 1 && d != spec.t) return false;
      }
      if (y + 1 < height) {
        long long d = map(x, y + 1) - map(x, y);
        if (d != 1 && d != spec.t) return false;
      }
    }
  return true;
}

std::optional<GridLowerBound> grid_lower_bound(const DistanceSpec& spec) {
  if (spec.t < kGridHeight) return std::nullopt;
  GridEmbedding emb{spec, kGridWidth, kGridHeight};
  if (!emb.injective() || !emb.adjacency_preserving())
    throw std::logic_error("grid_lower_bound: embedding failed verification");
  return GridLowerBound{kSquareLatticeLowerBound, emb};
}

}  // namespace packing
