#include "packing/pattern.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

namespace packing {

namespace {

// Positions of each color within [0, n); index 0 unused.
std::vector<std::vector<long long>> positions_by_color(const std::vector<int>& entries, int max_color,
                                                       bool skip_zero) {
  std::vector<std::vector<long long>> pos(static_cast<size_t>(max_color) + 1);
  for (size_t i = 0; i < entries.size(); ++i) {
    int c = entries[i];
    if (c == 0 && skip_zero) continue;
    pos[static_cast<size_t>(c)].push_back(static_cast<long long>(i));
  }
  return pos;
}

bool violation_less(const Violation& a, const Violation& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

// First violation among pairs of color v in a periodic word, scanning i
// over one period and j over (i, i + v*t]. Periodic copies of the same
// position (j = i + period, ...) are included.
std::optional<Violation> first_periodic_violation(const PeriodicColoring& col,
                                                  const std::vector<long long>& pos, int v) {
  const long long p = col.period();
  const long long window = static_cast<long long>(v) * col.spec.t;
  const size_t cnt = pos.size();
  if (cnt == 0) return std::nullopt;
  for (size_t a = 0; a < cnt; ++a) {
    long long i = pos[a];
    size_t b = a + 1;
    long long lap = 0;
    while (true) {
      if (b == cnt) {
        b = 0;
        lap += p;
      }
      long long j = pos[b] + lap;
      long long n = j - i;
      if (n > window) break;
      int d = distance(col.spec, 0, n);
      if (d <= v) return Violation{i, j, v, d};
      ++b;
    }
  }
  return std::nullopt;
}

std::optional<Violation> first_finite_violation(const FiniteColoring& col,
                                                const std::vector<long long>& pos, int v) {
  const long long window = static_cast<long long>(v) * col.spec.t;
  for (size_t a = 0; a < pos.size(); ++a) {
    for (size_t b = a + 1; b < pos.size(); ++b) {
      long long n = pos[b] - pos[a];
      if (n > window) break;
      int d = distance(col.spec, 0, n);
      if (d <= v)
        return Violation{col.start + pos[a], col.start + pos[b], v, d};
    }
  }
  return std::nullopt;
}

}  // namespace

int PeriodicColoring::color_count() const {
  return word.empty() ? 0 : *std::max_element(word.begin(), word.end());
}

std::optional<Violation> verify_periodic(const PeriodicColoring& coloring, int threads) {
  if (coloring.word.empty()) throw std::invalid_argument("verify_periodic: empty word");
  for (int c : coloring.word)
    if (c < 1) throw std::invalid_argument("verify_periodic: word entries must be >= 1");

  const int cmax = coloring.color_count();
  auto pos = positions_by_color(coloring.word, cmax, false);

  std::vector<std::optional<Violation>> firsts(static_cast<size_t>(cmax) + 1);
  if (threads <= 1) {
    for (int v = 1; v <= cmax; ++v)
      firsts[static_cast<size_t>(v)] = first_periodic_violation(coloring, pos[static_cast<size_t>(v)], v);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{1};
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&]() {
        for (int v = next.fetch_add(1); v <= cmax; v = next.fetch_add(1))
          firsts[static_cast<size_t>(v)] =
              first_periodic_violation(coloring, pos[static_cast<size_t>(v)], v);
      });
    for (auto& th : pool) th.join();
  }

  std::optional<Violation> best;
  for (int v = 1; v <= cmax; ++v) {
    const auto& f = firsts[static_cast<size_t>(v)];
    if (f && (!best || violation_less(*f, *best))) best = f;
  }
  return best;
}

std::optional<Violation> verify_finite(const FiniteColoring& coloring) {
  for (int c : coloring.entries)
    if (c < 0) throw std::invalid_argument("verify_finite: entries must be >= 0");
  if (coloring.entries.empty()) return std::nullopt;
  int cmax = *std::max_element(coloring.entries.begin(), coloring.entries.end());
  if (cmax == 0) return std::nullopt;
  auto pos = positions_by_color(coloring.entries, cmax, true);
  std::optional<Violation> best;
  for (int v = 1; v <= cmax; ++v) {
    auto f = first_finite_violation(coloring, pos[static_cast<size_t>(v)], v);
    if (f && (!best || violation_less(*f, *best))) best = f;
  }
  return best;
}

PatternParseError::PatternParseError(int line_, int column_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + what_),
      line(line_),
      column(column_) {}

namespace {

// Minimal tokenizer tracking line/column; commas count as whitespace,
// '#' skips to end of line.
struct Tokenizer {
  std::istream& in;
  int line = 1;
  int col = 0;

  explicit Tokenizer(std::istream& s) : in(s) {}

  int get() {
    int ch = in.get();
    if (ch == '\n') {
      ++line;
      col = 0;
    } else if (ch != EOF) {
      ++col;
    }
    return ch;
  }

  // next token, or empty at EOF
  std::string next(int* tok_line = nullptr, int* tok_col = nullptr) {
    int ch;
    while ((ch = get()) != EOF) {
      if (ch == '#') {
        while (ch != EOF && ch != '\n') ch = get();
        continue;
      }
      if (std::isspace(ch) || ch == ',') continue;
      break;
    }
    if (ch == EOF) return {};
    if (tok_line) *tok_line = line;
    if (tok_col) *tok_col = col;
    std::string tok(1, static_cast<char>(ch));
    while (true) {
      int peek = in.peek();
      if (peek == EOF || std::isspace(peek) || peek == ',' || peek == '#') break;
      tok.push_back(static_cast<char>(get()));
    }
    return tok;
  }
};

long long parse_int(const std::string& tok, int line, int col) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw PatternParseError(line, col, "expected an integer, got '" + tok + "'");
  }
}

// `key=value` pair from the header
long long header_field(Tokenizer& tz, const std::string& key) {
  int ln = tz.line, cl = tz.col;
  std::string tok = tz.next(&ln, &cl);
  if (tok.empty())
    throw PatternParseError(tz.line, tz.col, "missing header field '" + key + "'");
  auto eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key)
    throw PatternParseError(ln, cl, "expected '" + key + "=<int>', got '" + tok + "'");
  return parse_int(tok.substr(eq + 1), ln, cl);
}

}  // namespace

PeriodicColoring read_pattern(std::istream& in) {
  Tokenizer tz(in);
  long long t = header_field(tz, "t");
  long long period = header_field(tz, "period");
  long long colors = header_field(tz, "colors");
  if (t < 2) throw PatternParseError(tz.line, tz.col, "t must be >= 2");
  if (period < 1) throw PatternParseError(tz.line, tz.col, "period must be >= 1");

  std::vector<int> word;
  word.reserve(static_cast<size_t>(period));
  for (long long k = 0; k < period; ++k) {
    int ln = tz.line, cl = tz.col;
    std::string tok = tz.next(&ln, &cl);
    if (tok.empty())
      throw PatternParseError(tz.line, tz.col,
                              "word ended after " + std::to_string(k) + " of " +
                                  std::to_string(period) + " entries");
    long long v = parse_int(tok, ln, cl);
    if (v < 1) throw PatternParseError(ln, cl, "color entries must be >= 1");
    word.push_back(static_cast<int>(v));
  }
  int ln = tz.line, cl = tz.col;
  std::string extra = tz.next(&ln, &cl);
  if (!extra.empty())
    throw PatternParseError(ln, cl, "trailing token '" + extra + "' after " +
                                        std::to_string(period) + " entries");

  PeriodicColoring col{DistanceSpec(static_cast<int>(t)), std::move(word)};
  if (col.color_count() != colors)
    throw PatternParseError(ln, cl,
                            "declared colors=" + std::to_string(colors) + " but max entry is " +
                                std::to_string(col.color_count()));
  return col;
}

PeriodicColoring read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pattern file: " + path);
  return read_pattern(in);
}

std::string write_pattern(const PeriodicColoring& coloring) {
  std::ostringstream out;
  out << "t=" << coloring.spec.t << " period=" << coloring.period()
      << " colors=" << coloring.color_count() << "\n";
  for (size_t i = 0; i < coloring.word.size(); ++i) {
    out << coloring.word[i];
    out << (((i + 1) % 20 == 0 || i + 1 == coloring.word.size()) ? "\n" : ",");
  }
  return out.str();
}

FiniteColoring read_finite(std::istream& in) {
  Tokenizer tz(in);
  long long t = header_field(tz, "t");
  long long start = header_field(tz, "start");
  long long length = header_field(tz, "length");
  if (t < 2) throw PatternParseError(tz.line, tz.col, "t must be >= 2");
  if (length < 0) throw PatternParseError(tz.line, tz.col, "length must be >= 0");
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(length));
  for (long long k = 0; k < length; ++k) {
    int ln = tz.line, cl = tz.col;
    std::string tok = tz.next(&ln, &cl);
    if (tok.empty()) throw PatternParseError(tz.line, tz.col, "entries ended early");
    long long v = parse_int(tok, ln, cl);
    if (v < 0) throw PatternParseError(ln, cl, "entries must be >= 0");
    entries.push_back(static_cast<int>(v));
  }
  return FiniteColoring{DistanceSpec(static_cast<int>(t)), start, std::move(entries)};
}

std::string write_finite(const FiniteColoring& coloring) {
  std::ostringstream out;
  out << "t=" << coloring.spec.t << " start=" << coloring.start
      << " length=" << coloring.entries.size() << "\n";
  for (size_t i = 0; i < coloring.entries.size(); ++i) {
    out << coloring.entries[i];
    out << (((i + 1) % 20 == 0 || i + 1 == coloring.entries.size()) ? "\n" : ",");
  }
  return out.str();
}

}  // namespace packing
