// density.hpp
//
// Density-bound engine: exact window maximization for small-color
// classes, per-color reciprocal bounds 1/max_window_for_color(v), and
// their combination into a lower-bound verdict. Any length-m window
// bound M implies the color classes jointly have density at most M/m;
// adding the per-color reciprocals for the remaining colors must reach
// at least 1 for a coloring to exist, so a total strictly below 1 proves
// chi_rho > c. All arithmetic is exact rational.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packing/lb_search.hpp"
#include "packing/pattern.hpp"
#include "packing/rational.hpp"

namespace packing {

// Exact maximum number M of positions in any m consecutive integers that
// can be colored with colors {1..l} under the packing condition
// (constraints only among the m positions).
struct WindowBound {
  DistanceSpec spec;
  int colors_upto;          // the color set is {1..colors_upto}
  long long window;         // m
  long long max_colored;    // M
  FiniteColoring certificate;  // one optimal partial coloring (may be empty if assumed)
  std::string provenance;   // "computed" or "unverified-paper-value"
  uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Exhaustive branch and bound; prunes with "colored so far + suffix
// bound <= best" where suffix bounds come from exact maxima of short
// windows composed subadditively, plus forbidden-offset feasibility.
// Returns nullopt if the budget is exceeded (never a fabricated bound).
std::optional<WindowBound> max_colorable(const DistanceSpec& spec, int colors_upto,
                                         long long window, const SearchLimits& limits = {});

// Wraps an externally supplied M that was not recomputed here.
WindowBound assumed_window_bound(const DistanceSpec& spec, int colors_upto, long long window,
                                 long long max_colored);

struct DensityLedger {
  DistanceSpec spec;
  int total_colors;  // c
  int split;         // l
  WindowBound window_bound;
  // (color v, 1/max_window_for_color(v)) for v in [split+1, total_colors]
  std::vector<std::pair<int, Rational>> per_color;
  Rational total;
  bool verdict;             // total < 1, exactly
  int implied_lower_bound;  // total_colors + 1 when verdict holds

  std::string report(int decimal_digits = 6) const;
};

// Combines M/m with the per-color reciprocal bounds in exact rational
// arithmetic. The verdict "chi_rho > c" holds iff the total is < 1.
DensityLedger combine(const DistanceSpec& spec, int total_colors, int split,
                      const WindowBound& window_bound);

}  // namespace packing
