// pattern.hpp
//
// Periodic and finite colorings of D(1,t), their text format, and sound
// verification of the packing condition.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packing/distance_graph.hpp"

namespace packing {

// Witness of a failed packing condition: positions i < j both carry
// `color` and their graph distance is <= color.
struct Violation {
  long long i;
  long long j;
  int color;
  int distance;
};

// A coloring of all of Z by the repeating word: c(i) = word[i mod p].
struct PeriodicColoring {
  DistanceSpec spec;
  std::vector<int> word;

  long long period() const { return static_cast<long long>(word.size()); }
  int color_count() const;  // max entry
  int at(long long i) const {
    long long p = period();
    long long r = i % p;
    return word[static_cast<size_t>(r < 0 ? r + p : r)];
  }
};

// A partial coloring of the window [start, start + entries.size());
// entry 0 means uncolored.
struct FiniteColoring {
  DistanceSpec spec;
  long long start = 0;
  std::vector<int> entries;
};

// Checks the packing condition over all of Z.
//
// For color v only pairs at offset n <= v*t need inspection: any two
// positions further apart have distance >= ceil(n/t) > v. Together with
// periodicity, scanning i over one period and j over (i, i + v*t] is a
// complete check. Returns the lexicographically (i, j)-first violation,
// or nullopt if the coloring is valid.
//
// Throws std::invalid_argument for malformed words (entry < 1 or empty)
// before any checking. With threads > 1 colors are checked in parallel;
// the verdict is identical to the sequential one.
std::optional<Violation> verify_periodic(const PeriodicColoring& coloring, int threads = 1);

// Same condition restricted to the colored entries of a finite window;
// uncolored positions are unconstrained.
std::optional<Violation> verify_finite(const FiniteColoring& coloring);

struct PatternParseError : std::runtime_error {
  int line;
  int column;
  PatternParseError(int line_, int column_, const std::string& what_);
};

// Pattern text format: a header line `t=<int> period=<int> colors=<int>`,
// then exactly `period` whitespace/comma-separated positive integers.
// Lines starting with `#` are comments. `colors` must equal the maximum
// entry of the word.
PeriodicColoring read_pattern(std::istream& in);
PeriodicColoring read_pattern_file(const std::string& path);
std::string write_pattern(const PeriodicColoring& coloring);

// Finite-window variant used to persist search witnesses: header
// `t=<int> start=<int> length=<int>`, entries may be 0 (uncolored).
FiniteColoring read_finite(std::istream& in);
std::string write_finite(const FiniteColoring& coloring);

}  // namespace packing
