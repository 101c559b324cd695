// constructor.hpp
//
// Builds explicit periodic packing colorings of D(1,t) for large t by
// decomposing the column range [0,t) into 24-column strips tiled with a
// 24x24 square-lattice pattern (colors 1..17) and single-column bands
// carrying the word 1,k,1,k+1,...,1,2k-1 (colors {1} and 18..35), plus,
// for even t, one band colored from [18,56] by a searched path pattern.
// Every assembly is re-verified by verify_periodic before it is
// reported; the offset arithmetic is not trusted on its own.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "packing/lb_search.hpp"
#include "packing/pattern.hpp"

namespace packing {

// A 24x24 pattern of colors 1..17 that colors the square lattice when
// tiled periodically in both directions. cells[a][b]: a along the
// strip's band axis, b along t-steps. Color 1 occupies exactly one
// checkerboard class; the loader normalizes it to the (a+b)-even class.
class LatticePattern {
 public:
  static constexpr int kSide = 24;
  static constexpr int kMaxColor = 17;

  static LatticePattern load(std::istream& in);
  static LatticePattern load_file(const std::string& path);

  int at(int a, int b) const {
    return cells_[static_cast<size_t>(mod24(a))][static_cast<size_t>(mod24(b))];
  }
  int max_color() const;

  // toroidal Manhattan packing validity; nullopt when valid
  std::optional<std::string> validate() const;

 private:
  static int mod24(int v) { return ((v % kSide) + kSide) % kSide; }
  std::array<std::array<int, kSide>, kSide> cells_{};
};

// The i-band: the arithmetic progression {i + n*t}, an induced infinite
// path in D(1,t). Requires 0 <= i <= t-1.
struct BandRef {
  DistanceSpec spec;
  int column;

  bool contains(long long x) const;
  std::vector<long long> enumerate(long long lo, long long hi) const;  // members in [lo, hi)
};
BandRef i_band(const DistanceSpec& spec, int i);

// The i-strip: union of bands i..i+23. Requires t > 24 and
// 0 <= i <= t-24.
struct StripRef {
  DistanceSpec spec;
  int first_column;

  bool contains(long long x) const;
  std::vector<long long> enumerate(long long lo, long long hi) const;
};
StripRef i_strip(const DistanceSpec& spec, int i);

// Band word 1,k,1,k+1,...,1,2k-1 (period 2k): color 1 every other step,
// each of k..2k-1 once per period, so same-color path gaps are 2 and 2k.
struct BandPattern {
  int base_color;
  std::vector<int> word;
};
BandPattern band_word(int k);  // requires k > 2

// Assignment of one band: vertex column + row*t gets
// word[(row - row_shift) mod word.size()].
struct BandColoring {
  DistanceSpec spec;
  int column;
  std::vector<int> word;
  long long row_shift;

  int color_at(long long x) const;
  FiniteColoring materialize(long long row_lo, long long row_hi) const;
};
// start must be a vertex of the band; the word starts there.
BandColoring band_coloring(const DistanceSpec& spec, int k, long long start);

// Assignment of one strip from the lattice pattern: vertex
// i + a + b*t (a in [0,24)) gets cells[a - a0][b - b0] where start
// = i + a0 + b0*t is the vertex carrying pattern cell (0,0).
struct StripColoring {
  DistanceSpec spec;
  int first_column;
  const LatticePattern* pattern;
  int a_shift;
  long long b_shift;

  int color_at(long long x) const;
  FiniteColoring materialize(long long lo, long long hi) const;
};
StripColoring strip_coloring(const DistanceSpec& spec, int strip_index, long long start,
                             const LatticePattern& pattern);

// A periodic word over colors [k, 3k+2] valid on the infinite path
// (same-color gaps exceed the color), found by backtracking search over
// candidate periods in increasing order, colors tried ascending; the
// result is re-verified before return. Throws std::runtime_error if the
// node budget is exhausted before any period succeeds.
std::vector<int> goddard_band_pattern(int k, uint64_t max_nodes_per_period = 50'000'000);

// ---- full assembly -------------------------------------------------------

struct Segment {
  enum class Kind { strip, band, goddard_band };
  Kind kind;
  int base_column;   // first column
  int columns;       // 24 for strips, 1 for bands
  long long row_shift;
};

struct SpiralLayout {
  DistanceSpec spec;
  bool even_case;
  int r;
  int s;
  std::vector<Segment> segments;
};

// Decomposes t per the odd (t = 24s + r, r odd, s >= r) or even
// (t = 24(s+2) + r, r even, s >= r) scheme. Throws std::invalid_argument
// when t admits no decomposition.
SpiralLayout plan_layout(const DistanceSpec& spec);

struct AssembleReport {
  SpiralLayout layout;
  long long period = 0;
  int max_color = 0;
  std::vector<long long> color_histogram;  // index = color
  std::vector<std::string> deviations;     // band shifts changed by the fallback search
  uint64_t goddard_period = 0;             // even case only
};

struct Assembly {
  PeriodicColoring coloring;
  AssembleReport report;
};

struct AssemblyError : std::runtime_error {
  std::optional<Violation> violation;
  explicit AssemblyError(const std::string& what_, std::optional<Violation> v = std::nullopt)
      : std::runtime_error(what_), violation(v) {}
};

// Builds the full periodic coloring (period 72t for odd t, lcm(72,P)*t
// for even t with goddard period P) and verifies it. If the planned band
// shifts fail verification, band row shifts are searched in a
// deterministic order until verification passes; changes are recorded in
// the report. Throws AssemblyError if no verified assembly is found.
Assembly assemble(const DistanceSpec& spec, const LatticePattern& pattern, int verify_threads = 1);

std::string report_text(const AssembleReport& report);

}  // namespace packing
