#include "packing/density.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace packing {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Maximization engine over positions 1..m: each position is either
// skipped or given a feasible color in {1..l}, colors tried first so
// dense assignments are found early.
class MaxEngine {
 public:
  MaxEngine(const DistanceSpec& spec, int l, long long m, const std::vector<long long>& suffix_ub)
      : spec_(spec), l_(l), m_(m), suffix_ub_(suffix_ub) {
    offs_.resize(static_cast<size_t>(l_) + 1);
    for (int v = 1; v <= l_; ++v) {
      ForbiddenOffsetSet f(spec_, v);
      for (int n : f.offsets())
        if (n <= m_ - 1) offs_[static_cast<size_t>(v)].push_back(n);
    }
    blocked_.assign(static_cast<size_t>(l_ + 1) * (m_ + 2), 0);
    assigned_.assign(static_cast<size_t>(m_) + 1, 0);
    best_assigned_.assign(static_cast<size_t>(m_) + 1, 0);
  }

  // Returns true if the search ran to completion (exact maximum), false
  // on budget exhaustion.
  bool run(const SearchLimits& limits) {
    limits_ = limits;
    start_ = Clock::now();
    budget_hit_ = false;
    dfs(1, 0);
    return !budget_hit_;
  }

  long long best() const { return best_; }
  uint64_t nodes() const { return nodes_; }
  double elapsed() const { return seconds_since(start_); }
  FiniteColoring certificate() const {
    std::vector<int> entries(best_assigned_.begin() + 1, best_assigned_.end());
    return FiniteColoring{spec_, 1, std::move(entries)};
  }

 private:
  void dfs(long long p, long long colored) {
    if (budget_hit_) return;
    if (p > m_) {
      if (colored > best_) {
        best_ = colored;
        best_assigned_ = assigned_;
      }
      return;
    }
    if (colored + suffix_ub_[static_cast<size_t>(m_ - p + 1)] <= best_) return;
    ++nodes_;
    if (limits_check()) return;
    for (int c = 1; c <= l_; ++c) {
      if (blocked_at(c, p) != 0) continue;
      place(p, c);
      dfs(p + 1, colored + 1);
      unplace(p);
      if (budget_hit_) return;
    }
    dfs(p + 1, colored);  // leave p uncolored
  }

  bool limits_check() {
    if (limits_.max_nodes && nodes_ >= limits_.max_nodes) {
      budget_hit_ = true;
      return true;
    }
    if ((nodes_ & 16383) == 0 && limits_.max_seconds > 0 &&
        seconds_since(start_) > limits_.max_seconds) {
      budget_hit_ = true;
      return true;
    }
    return false;
  }

  void place(long long p, int c) {
    assigned_[static_cast<size_t>(p)] = c;
    for (int n : offs_[static_cast<size_t>(c)]) {
      long long q = p + n;
      if (q > m_) break;
      ++blocked_at(c, q);
    }
  }

  void unplace(long long p) {
    int c = assigned_[static_cast<size_t>(p)];
    assigned_[static_cast<size_t>(p)] = 0;
    for (int n : offs_[static_cast<size_t>(c)]) {
      long long q = p + n;
      if (q > m_) break;
      --blocked_at(c, q);
    }
  }

  uint16_t& blocked_at(int c, long long p) {
    return blocked_[static_cast<size_t>(c) * (m_ + 2) + static_cast<size_t>(p)];
  }

 private:
  SearchLimits limits_;
  DistanceSpec spec_;
  int l_;
  long long m_;
  const std::vector<long long>& suffix_ub_;
  std::vector<std::vector<int>> offs_;
  std::vector<uint16_t> blocked_;
  std::vector<int> assigned_;
  std::vector<int> best_assigned_;
  long long best_ = -1;
  uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  Clock::time_point start_;
};

// Upper bounds on colorable positions per window length, bootstrapped
// from exact maxima of short windows: splitting a window only relaxes
// constraints, so M(a+b) <= M(a) + M(b).
std::vector<long long> build_suffix_bounds(const DistanceSpec& spec, int l, long long m,
                                           const SearchLimits& limits, uint64_t& nodes_used,
                                           bool& budget_hit) {
  const long long bootstrap = std::min<long long>(m - 1, 18);
  std::vector<long long> ub(static_cast<size_t>(m) + 1, 0);
  for (long long len = 1; len <= m; ++len) {
    if (len <= bootstrap) {
      ub[static_cast<size_t>(len)] = len;  // engine consults its own entry; seed trivially
      MaxEngine eng(spec, l, len, ub);
      if (!eng.run(limits)) {
        budget_hit = true;
        return ub;
      }
      nodes_used += eng.nodes();
      ub[static_cast<size_t>(len)] = eng.best();
    } else {
      long long best = len;  // trivial bound
      for (long long j = 1; j <= len / 2; ++j)
        best = std::min(best, ub[static_cast<size_t>(j)] + ub[static_cast<size_t>(len - j)]);
      ub[static_cast<size_t>(len)] = best;
    }
  }
  return ub;
}

}  // namespace

std::optional<WindowBound> max_colorable(const DistanceSpec& spec, int colors_upto,
                                         long long window, const SearchLimits& limits) {
  if (colors_upto < 1) throw std::invalid_argument("max_colorable: need colors_upto >= 1");
  if (window < 1) throw std::invalid_argument("max_colorable: need window >= 1");
  Clock::time_point start = Clock::now();
  uint64_t nodes = 0;
  bool budget_hit = false;
  auto ub = build_suffix_bounds(spec, colors_upto, window, limits, nodes, budget_hit);
  if (budget_hit) return std::nullopt;
  MaxEngine eng(spec, colors_upto, window, ub);
  if (!eng.run(limits)) return std::nullopt;
  WindowBound wb{spec,        colors_upto,       window, eng.best(), eng.certificate(),
                 "computed",  nodes + eng.nodes(), seconds_since(start)};
  if (verify_finite(wb.certificate))
    throw std::logic_error("max_colorable: certificate fails verification");
  return wb;
}

WindowBound assumed_window_bound(const DistanceSpec& spec, int colors_upto, long long window,
                                 long long max_colored) {
  if (max_colored < 0 || max_colored > window)
    throw std::invalid_argument("assumed_window_bound: M outside [0, window]");
  return WindowBound{spec,
                     colors_upto,
                     window,
                     max_colored,
                     FiniteColoring{spec, 1, {}},
                     "unverified-paper-value",
                     0,
                     0.0};
}

DensityLedger combine(const DistanceSpec& spec, int total_colors, int split,
                      const WindowBound& window_bound) {
  if (split < 1 || split > total_colors)
    throw std::invalid_argument("combine: need 1 <= split <= total_colors");
  if (window_bound.colors_upto != split || window_bound.spec.t != spec.t)
    throw std::invalid_argument("combine: window bound does not match (spec, split)");

  DensityLedger ledger{spec, total_colors, split, window_bound, {}, Rational(), false, 0};
  Rational total(static_cast<uint64_t>(window_bound.max_colored),
                 static_cast<uint64_t>(window_bound.window));
  for (int v = split + 1; v <= total_colors; ++v) {
    long long w = max_window_for_color(spec, v);
    Rational term(1, static_cast<uint64_t>(w));
    ledger.per_color.emplace_back(v, term);
    total += term;
  }
  ledger.total = total;
  ledger.verdict = total.less_than_one();
  ledger.implied_lower_bound = ledger.verdict ? total_colors + 1 : 0;
  return ledger;
}

std::string DensityLedger::report(int decimal_digits) const {
  std::ostringstream out;
  out << "t=" << spec.t << " colors=1.." << total_colors << " split=1.." << split
      << " window=" << window_bound.window << "\n";
  out << "  d(1.." << split << ") <= " << window_bound.max_colored << "/"
      << window_bound.window << "  [" << window_bound.provenance << "]\n";
  for (const auto& [v, term] : per_color)
    out << "  d(" << v << ") <= " << term.to_fraction_string() << "\n";
  out << "  total = " << total.to_fraction_string() << " = "
      << total.to_decimal_string(decimal_digits) << "\n";
  if (verdict)
    out << "  verdict: total < 1, so chi_rho(D(1," << spec.t << ")) >= " << implied_lower_bound
        << "\n";
  else
    out << "  verdict: total >= 1, no conclusion\n";
  return out.str();
}

}  // namespace packing
