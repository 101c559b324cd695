// lb_search.hpp
//
// Exhaustive backtracking search over packing colorings of the window
// 1..k of D(1,t) with colors 1..c. An infeasible outcome proves
// chi_rho(D(1,t)) > c:
//
//   By translation invariance of D(1,t), if all of Z can be colored with
//   colors <= c then there is such a coloring giving position 1 the
//   color c (either c occurs somewhere and the coloring can be shifted,
//   or c is unused and can be substituted at any single vertex). Its
//   restriction to 1..k satisfies strictly fewer constraints than the
//   infinite coloring, so if no total coloring of 1..k exists, neither
//   does one of Z.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "packing/pattern.hpp"

namespace packing {

struct SearchProblem {
  DistanceSpec spec;
  int max_color;                       // colors 1..max_color
  int length;                          // window 1..length
  std::optional<int> fixed_first;     // color forced at position 1

  void validate() const;
};

struct SearchLimits {
  uint64_t max_nodes = 0;              // 0 = unlimited
  double max_seconds = 86400.0;        // 24h wall-clock default
};

enum class SearchStatus { feasible, infeasible, indeterminate };

struct SearchOutcome {
  SearchStatus status = SearchStatus::indeterminate;
  std::optional<FiniteColoring> witness;  // set when feasible
  uint64_t nodes = 0;                     // color placements explored
  double elapsed_seconds = 0.0;
  // Versioned, checksummed resume blob; filled when a single-threaded
  // run exceeds its budget.
  std::vector<uint8_t> checkpoint;
};

// Searches positions 1..k left to right, colors in ascending order, for
// a total coloring. Feasible as soon as one is found (and the witness is
// re-verified in-process); infeasible once the tree is exhausted. A
// budget hit yields an indeterminate outcome, never an infeasibility
// claim. With threads > 1 the tree is split on the color choices of a
// fixed position prefix; the verdict and witness match the sequential
// run, node counts are summed over subtrees. Checkpoints are produced
// only by single-threaded runs.
SearchOutcome prove(const SearchProblem& problem, const SearchLimits& limits = {},
                    int threads = 1);

// Feasible-side companion of prove(): identical search, used to check
// that c+1 colors succeed where c fail. Callers typically leave
// fixed_first unset here.
SearchOutcome find_coloring(const SearchProblem& problem, const SearchLimits& limits = {},
                            int threads = 1);

// Continues a checkpointed run. The resumed search explores exactly the
// remaining subtree; verdict and cumulative node count match an
// uninterrupted run. Throws std::runtime_error on a version mismatch or
// corrupt blob.
SearchOutcome resume(std::span<const uint8_t> blob, const SearchLimits& limits = {});

// Problem parameters embedded in a checkpoint, for reporting.
SearchProblem checkpoint_problem(std::span<const uint8_t> blob);

}  // namespace packing
