#include "packing/lb_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>
#include <thread>

#include "packing/version.hpp"

namespace packing {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

uint64_t fnv1a64(const uint8_t* data, size_t n) {
  uint64_t h = 1469598103934665603ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  return h;
}

// Depth-first engine over positions 1..k, colors ascending. A "node" is
// one color placement. blocked[v][p] counts earlier placements of v that
// forbid v at p, so the candidate probe is O(1).
class Engine {
 public:
  explicit Engine(const SearchProblem& pb) : spec_(pb.spec), cmax_(pb.max_color), k_(pb.length) {
    offs_.resize(static_cast<size_t>(cmax_) + 1);
    for (int v = 1; v <= cmax_; ++v) {
      ForbiddenOffsetSet f(spec_, v);
      for (int n : f.offsets())
        if (n <= k_ - 1) offs_[static_cast<size_t>(v)].push_back(n);
    }
    blocked_.assign(static_cast<size_t>(cmax_ + 1) * (k_ + 2), 0);
    assigned_.assign(static_cast<size_t>(k_) + 1, 0);
    first_pos_ = 1;
    if (pb.fixed_first) {
      place(1, *pb.fixed_first);
      first_pos_ = 2;
    }
    item_floor_ = first_pos_;
    cur_ = first_pos_;
    try_color_ = 1;
  }

  // Restores a checkpointed mid-search state; `prefix` holds the colors
  // assigned at positions [first_pos, cur).
  void restore(int cur, int try_color, const std::vector<uint8_t>& prefix, uint64_t nodes,
               double elapsed) {
    if (cur < first_pos_ || cur > k_ + 1 ||
        static_cast<size_t>(cur - first_pos_) != prefix.size())
      throw std::runtime_error("checkpoint: inconsistent search state");
    for (size_t i = 0; i < prefix.size(); ++i) {
      int c = prefix[i];
      if (c < 1 || c > cmax_) throw std::runtime_error("checkpoint: prefix color out of range");
      place(first_pos_ + static_cast<int>(i), c);
    }
    cur_ = cur;
    try_color_ = try_color;
    nodes_ = nodes;
    prior_elapsed_ = elapsed;
  }

  // Seeds the engine with a work-item prefix starting at first_pos.
  void seed(const std::vector<uint8_t>& prefix) {
    for (size_t i = 0; i < prefix.size(); ++i) place(first_pos_ + static_cast<int>(i), prefix[i]);
    cur_ = first_pos_ + static_cast<int>(prefix.size());
    try_color_ = 1;
    item_floor_ = cur_;
  }

  // stop_below: when set, the search aborts once *stop_below < my_rank
  // (a lower-ranked worker already found a witness).
  SearchStatus run(const SearchLimits& limits, const std::atomic<long>* stop_below = nullptr,
                   long my_rank = 0) {
    start_ = Clock::now();
    while (true) {
      if (cur_ > k_) return SearchStatus::feasible;
      if (limits.max_nodes && nodes_ >= limits.max_nodes) return SearchStatus::indeterminate;
      if ((nodes_ & 8191) == 0) {
        if (limits.max_seconds > 0 && seconds_since(start_) > limits.max_seconds)
          return SearchStatus::indeterminate;
        if (stop_below && stop_below->load(std::memory_order_relaxed) < my_rank)
          return SearchStatus::indeterminate;
      }
      int c = try_color_;
      for (; c <= cmax_; ++c)
        if (blocked_at(c, cur_) == 0) break;
      if (c <= cmax_) {
        place(cur_, c);
        ++nodes_;
        ++cur_;
        try_color_ = 1;
      } else {
        if (cur_ == item_floor_) return SearchStatus::infeasible;
        --cur_;
        int prev = assigned_[static_cast<size_t>(cur_)];
        unplace(cur_);
        try_color_ = prev + 1;
      }
    }
  }

  void place(int p, int c) {
    assigned_[static_cast<size_t>(p)] = c;
    for (int n : offs_[static_cast<size_t>(c)]) {
      int q = p + n;
      if (q > k_) break;  // offsets ascending
      ++blocked_at(c, q);
    }
  }

  void unplace(int p) {
    int c = assigned_[static_cast<size_t>(p)];
    assigned_[static_cast<size_t>(p)] = 0;
    for (int n : offs_[static_cast<size_t>(c)]) {
      int q = p + n;
      if (q > k_) break;
      --blocked_at(c, q);
    }
  }

  bool blocked(int c, int p) { return blocked_at(c, p) != 0; }

  uint64_t nodes() const { return nodes_; }
  void add_nodes(uint64_t n) { nodes_ += n; }
  double elapsed() const { return prior_elapsed_ + seconds_since(start_); }
  int cmax() const { return cmax_; }
  int length() const { return k_; }
  int first_pos() const { return first_pos_; }
  int cur() const { return cur_; }
  int try_color() const { return try_color_; }

  FiniteColoring witness() const {
    std::vector<int> entries(assigned_.begin() + 1, assigned_.end());
    return FiniteColoring{spec_, 1, std::move(entries)};
  }

  std::vector<uint8_t> prefix() const {
    std::vector<uint8_t> p;
    for (int q = first_pos_; q < cur_; ++q)
      p.push_back(static_cast<uint8_t>(assigned_[static_cast<size_t>(q)]));
    return p;
  }

 private:
  uint16_t& blocked_at(int c, int p) {
    return blocked_[static_cast<size_t>(c) * (k_ + 2) + static_cast<size_t>(p)];
  }

  DistanceSpec spec_;
  int cmax_;
  int k_;
  int first_pos_;
  int item_floor_ = 1;  // backtracking below this level exhausts the item
  int cur_;
  int try_color_;
  uint64_t nodes_ = 0;
  double prior_elapsed_ = 0.0;
  Clock::time_point start_;
  std::vector<std::vector<int>> offs_;
  std::vector<uint16_t> blocked_;
  std::vector<int> assigned_;
};

// ---- checkpoint blob ---------------------------------------------------
//
// Little-endian layout:
//   0   4  magic "PKLB"
//   4   4  format version (1)
//   8  24  program version tag, NUL padded
//  32   4  t
//  36   4  max_color
//  40   4  length
//  44   4  fixed_first (0 = none)
//  48   4  cur position
//  52   4  try_color
//  56   8  nodes explored so far
//  64   8  elapsed microseconds so far
//  72   4  prefix length L
//  76   L  colors assigned at positions [first_pos, cur)
//  76+L 8  FNV-1a 64 checksum of bytes [0, 76+L)

constexpr char kMagic[4] = {'P', 'K', 'L', 'B'};
constexpr uint32_t kFormat = 1;
constexpr size_t kTagLen = 24;

void put_u32(std::vector<uint8_t>& b, uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<uint8_t>& b, uint64_t v) {
  for (int i = 0; i < 8; ++i) b.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
uint32_t get_u32(std::span<const uint8_t> b, size_t off) {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[off + i]) << (8 * i);
  return v;
}
uint64_t get_u64(std::span<const uint8_t> b, size_t off) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[off + i]) << (8 * i);
  return v;
}

void version_tag(char out[kTagLen]) {
  std::memset(out, 0, kTagLen);
  std::snprintf(out, kTagLen, "packing-%s", kVersion);
}

std::vector<uint8_t> make_checkpoint(const SearchProblem& pb, const Engine& eng) {
  std::vector<uint8_t> b;
  b.insert(b.end(), kMagic, kMagic + 4);
  put_u32(b, kFormat);
  char tag[kTagLen];
  version_tag(tag);
  b.insert(b.end(), tag, tag + kTagLen);
  put_u32(b, static_cast<uint32_t>(pb.spec.t));
  put_u32(b, static_cast<uint32_t>(pb.max_color));
  put_u32(b, static_cast<uint32_t>(pb.length));
  put_u32(b, static_cast<uint32_t>(pb.fixed_first.value_or(0)));
  put_u32(b, static_cast<uint32_t>(eng.cur()));
  put_u32(b, static_cast<uint32_t>(eng.try_color()));
  put_u64(b, eng.nodes());
  put_u64(b, static_cast<uint64_t>(eng.elapsed() * 1e6));
  auto prefix = eng.prefix();
  put_u32(b, static_cast<uint32_t>(prefix.size()));
  b.insert(b.end(), prefix.begin(), prefix.end());
  put_u64(b, fnv1a64(b.data(), b.size()));
  return b;
}

struct ParsedCheckpoint {
  SearchProblem problem;
  int cur;
  int try_color;
  uint64_t nodes;
  double elapsed;
  std::vector<uint8_t> prefix;
};

ParsedCheckpoint parse_checkpoint(std::span<const uint8_t> b) {
  if (b.size() < 84) throw std::runtime_error("checkpoint: blob truncated");
  if (std::memcmp(b.data(), kMagic, 4) != 0) throw std::runtime_error("checkpoint: bad magic");
  uint64_t want = get_u64(b, b.size() - 8);
  if (fnv1a64(b.data(), b.size() - 8) != want)
    throw std::runtime_error("checkpoint: checksum mismatch (corrupt blob)");
  if (get_u32(b, 4) != kFormat) throw std::runtime_error("checkpoint: unsupported format version");
  char tag[kTagLen];
  version_tag(tag);
  if (std::memcmp(b.data() + 8, tag, kTagLen) != 0)
    throw std::runtime_error("checkpoint: program version mismatch");
  uint32_t t = get_u32(b, 32);
  uint32_t cmax = get_u32(b, 36);
  uint32_t k = get_u32(b, 40);
  uint32_t fix = get_u32(b, 44);
  ParsedCheckpoint pc{
      SearchProblem{DistanceSpec(static_cast<int>(t)), static_cast<int>(cmax),
                    static_cast<int>(k),
                    fix ? std::optional<int>(static_cast<int>(fix)) : std::nullopt},
      static_cast<int>(get_u32(b, 48)),
      static_cast<int>(get_u32(b, 52)),
      get_u64(b, 56),
      static_cast<double>(get_u64(b, 64)) / 1e6,
      {}};
  uint32_t plen = get_u32(b, 72);
  if (b.size() != 76 + static_cast<size_t>(plen) + 8)
    throw std::runtime_error("checkpoint: length mismatch");
  pc.prefix.assign(b.begin() + 76, b.begin() + 76 + plen);
  pc.problem.validate();
  return pc;
}

// ---- drivers -------------------------------------------------------------

SearchOutcome finish(const SearchProblem& pb, Engine& eng, SearchStatus st) {
  SearchOutcome out;
  out.status = st;
  out.nodes = eng.nodes();
  out.elapsed_seconds = eng.elapsed();
  if (st == SearchStatus::feasible) {
    out.witness = eng.witness();
    if (verify_finite(*out.witness))
      throw std::logic_error("lb_search: produced witness fails verification");
  } else if (st == SearchStatus::indeterminate) {
    out.checkpoint = make_checkpoint(pb, eng);
  }
  return out;
}

// Valid assignments of positions [first_pos, first_pos + depth) in search
// order; placements are counted toward `nodes`.
void enumerate_prefixes(Engine& eng, int pos, int depth_end, std::vector<uint8_t>& cur,
                        std::vector<std::vector<uint8_t>>& items, uint64_t& nodes) {
  if (pos >= depth_end) {
    items.push_back(cur);
    return;
  }
  for (int c = 1; c <= eng.cmax(); ++c) {
    if (eng.blocked(c, pos)) continue;
    eng.place(pos, c);
    ++nodes;
    cur.push_back(static_cast<uint8_t>(c));
    enumerate_prefixes(eng, pos + 1, depth_end, cur, items, nodes);
    cur.pop_back();
    eng.unplace(pos);
  }
}

SearchOutcome run_parallel(const SearchProblem& pb, const SearchLimits& limits, int threads) {
  Clock::time_point start = Clock::now();

  // Split on the color choices of a position prefix deep enough to feed
  // the workers; subtrees are independent.
  uint64_t split_nodes = 0;
  std::vector<std::vector<uint8_t>> items;
  {
    Engine splitter(pb);
    int depth = splitter.first_pos();
    while (true) {
      items.clear();
      split_nodes = 0;
      std::vector<uint8_t> cur;
      enumerate_prefixes(splitter, splitter.first_pos(), depth, cur, items, split_nodes);
      if (items.empty() || static_cast<int>(items.size()) >= 4 * threads ||
          depth >= pb.length + 1)
        break;
      ++depth;
    }
  }
  if (items.empty()) {
    // no valid prefix at all
    SearchOutcome out;
    out.status = SearchStatus::infeasible;
    out.nodes = split_nodes;
    out.elapsed_seconds = seconds_since(start);
    return out;
  }

  const long n_items = static_cast<long>(items.size());
  std::vector<SearchStatus> status(items.size(), SearchStatus::indeterminate);
  std::vector<std::optional<FiniteColoring>> witnesses(items.size());
  std::vector<uint64_t> item_nodes(items.size(), 0);
  std::vector<uint8_t> ran(items.size(), 0);
  std::atomic<long> next{0};
  std::atomic<long> found_min{n_items};

  auto worker = [&]() {
    while (true) {
      long i = next.fetch_add(1);
      if (i >= n_items) return;
      if (found_min.load(std::memory_order_relaxed) < i) continue;  // verdict already decided
      Engine eng(pb);
      eng.seed(items[static_cast<size_t>(i)]);
      SearchLimits item_limits = limits;
      if (limits.max_seconds > 0)
        item_limits.max_seconds = std::max(0.001, limits.max_seconds - seconds_since(start));
      SearchStatus st = eng.run(item_limits, &found_min, i);
      status[static_cast<size_t>(i)] = st;
      item_nodes[static_cast<size_t>(i)] = eng.nodes();
      ran[static_cast<size_t>(i)] = 1;
      if (st == SearchStatus::feasible) {
        witnesses[static_cast<size_t>(i)] = eng.witness();
        long cur = found_min.load();
        while (i < cur && !found_min.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  SearchOutcome out;
  out.nodes = split_nodes;
  for (uint64_t n : item_nodes) out.nodes += n;
  out.elapsed_seconds = seconds_since(start);
  // first non-infeasible item decides, mirroring the sequential scan
  out.status = SearchStatus::infeasible;
  for (long i = 0; i < n_items; ++i) {
    if (!ran[static_cast<size_t>(i)]) {
      out.status = SearchStatus::indeterminate;  // skipped after later witness
    } else if (status[static_cast<size_t>(i)] == SearchStatus::infeasible) {
      continue;
    } else {
      out.status = status[static_cast<size_t>(i)];
      if (out.status == SearchStatus::feasible) {
        out.witness = witnesses[static_cast<size_t>(i)];
        if (verify_finite(*out.witness))
          throw std::logic_error("lb_search: produced witness fails verification");
      }
    }
    break;
  }
  return out;
}

SearchOutcome run(const SearchProblem& pb, const SearchLimits& limits, int threads) {
  pb.validate();
  if (threads <= 1) {
    Engine eng(pb);
    return finish(pb, eng, eng.run(limits));
  }
  return run_parallel(pb, limits, threads);
}

}  // namespace

void SearchProblem::validate() const {
  if (max_color < 1) throw std::invalid_argument("SearchProblem: max_color must be >= 1");
  if (length < 1) throw std::invalid_argument("SearchProblem: length must be >= 1");
  if (fixed_first && (*fixed_first < 1 || *fixed_first > max_color))
    throw std::invalid_argument("SearchProblem: fixed_first outside [1, max_color]");
}

SearchOutcome prove(const SearchProblem& problem, const SearchLimits& limits, int threads) {
  return run(problem, limits, threads);
}

SearchOutcome find_coloring(const SearchProblem& problem, const SearchLimits& limits,
                            int threads) {
  return run(problem, limits, threads);
}

SearchOutcome resume(std::span<const uint8_t> blob, const SearchLimits& limits) {
  ParsedCheckpoint pc = parse_checkpoint(blob);
  Engine eng(pc.problem);
  eng.restore(pc.cur, pc.try_color, pc.prefix, pc.nodes, pc.elapsed);
  return finish(pc.problem, eng, eng.run(limits));
}

SearchProblem checkpoint_problem(std::span<const uint8_t> blob) {
  return parse_checkpoint(blob).problem;
}

}  // namespace packing
