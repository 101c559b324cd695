#include "packing/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace packing {

namespace {

// xorshift-free deterministic RNG: splitmix64, identical across platforms
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

class Chain {
 public:
  Chain(const AnnealConfig& cfg) : spec_(cfg.spec), p_(cfg.period), cmax_(cfg.max_color) {
    offs_.resize(static_cast<size_t>(cmax_) + 1);
    for (int v = 1; v <= cmax_; ++v) offs_[static_cast<size_t>(v)] = ForbiddenOffsetSet(spec_, v).offsets();
    // classes (i, n) with p | n pair a residue with itself; they appear in
    // both the forward and backward incident scans and must be un-doubled
    self_classes_.assign(static_cast<size_t>(cmax_) + 1, 0);
    for (int v = 1; v <= cmax_; ++v)
      for (int n : offs_[static_cast<size_t>(v)])
        if (n % p_ == 0) ++self_classes_[static_cast<size_t>(v)];
  }

  void init(Rng& rng, std::vector<int>& word) {
    word.resize(static_cast<size_t>(p_));
    for (int& w : word) w = 1 + rng.below(cmax_);
    energy_ = full_energy(word);
  }

  long long energy() const { return energy_; }

  long long full_energy(const std::vector<int>& word) const {
    long long e = 0;
    for (int i = 0; i < p_; ++i) {
      int v = word[static_cast<size_t>(i)];
      for (int n : offs_[static_cast<size_t>(v)])
        if (word[static_cast<size_t>((i + n) % p_)] == v) ++e;
    }
    return e;
  }

  // violating classes with residue q as either endpoint, under the
  // current content of word[q]
  long long incident(const std::vector<int>& word, int q) const {
    int v = word[static_cast<size_t>(q)];
    long long e = 0;
    for (int n : offs_[static_cast<size_t>(v)]) {
      if (word[static_cast<size_t>((q + n) % p_)] == v) ++e;
      if (word[static_cast<size_t>(((q - n) % p_ + p_) % p_)] == v) ++e;
    }
    return e - self_classes_[static_cast<size_t>(v)];
  }

  // applies word[q] = c and returns the exact energy delta
  long long flip(std::vector<int>& word, int q, int c) {
    long long before = incident(word, q);
    word[static_cast<size_t>(q)] = c;
    long long after = incident(word, q);
    energy_ += after - before;
    return after - before;
  }

  void set_energy(long long e) { energy_ = e; }

 private:
  DistanceSpec spec_;
  int p_;
  int cmax_;
  long long energy_ = 0;
  std::vector<std::vector<int>> offs_;
  std::vector<long long> self_classes_;
};

struct RestartResult {
  std::vector<int> best_word;
  long long best_energy;
  uint64_t steps;
  std::vector<TracePoint> trace;
};

RestartResult run_restart(const AnnealConfig& cfg, uint64_t seed) {
  Rng rng(seed);
  Chain chain(cfg);
  std::vector<int> word;
  chain.init(rng, word);

  const int steps_per_level = cfg.steps_per_level > 0 ? cfg.steps_per_level : 10 * cfg.period;

  double temp = cfg.initial_temperature;
  if (temp <= 0) {
    // aim for ~80% acceptance of the average uphill move
    double up_sum = 0;
    int up_n = 0;
    std::vector<int> probe = word;
    Chain probe_chain(cfg);
    probe_chain.set_energy(chain.energy());
    for (int k = 0; k < 512; ++k) {
      int q = rng.below(cfg.period);
      int c = 1 + rng.below(cfg.max_color);
      if (c == probe[static_cast<size_t>(q)]) continue;
      int old = probe[static_cast<size_t>(q)];
      long long d = probe_chain.flip(probe, q, c);
      if (d > 0) {
        up_sum += static_cast<double>(d);
        ++up_n;
      }
      probe_chain.flip(probe, q, old);
    }
    temp = up_n ? (up_sum / up_n) / std::log(1.0 / 0.8) : 1.0;
  }

  RestartResult res{word, chain.energy(), 0, {}};
  uint64_t accepted = 0;
  while (temp > cfg.min_temperature && res.best_energy > 0) {
    for (int s = 0; s < steps_per_level && chain.energy() > 0; ++s) {
      ++res.steps;
      int q = rng.below(cfg.period);
      int c = 1 + rng.below(cfg.max_color);
      if (c == word[static_cast<size_t>(q)]) continue;
      int old = word[static_cast<size_t>(q)];
      long long d = chain.flip(word, q, c);
      bool keep = d <= 0 || rng.unit() < std::exp(-static_cast<double>(d) / temp);
      if (!keep) {
        chain.flip(word, q, old);
        continue;
      }
      ++accepted;
      if ((accepted & 4095) == 0 && chain.full_energy(word) != chain.energy())
        throw std::logic_error("anneal: incremental energy drifted from full recount");
      if (chain.energy() < res.best_energy) {
        res.best_energy = chain.energy();
        res.best_word = word;
      }
    }
    res.trace.push_back(TracePoint{res.steps, temp, chain.energy()});
    temp *= cfg.cooling;
  }
  return res;
}

}  // namespace

long long anneal_energy(const DistanceSpec& spec, const std::vector<int>& word) {
  if (word.empty()) throw std::invalid_argument("anneal_energy: empty word");
  int cmax = *std::max_element(word.begin(), word.end());
  int cmin = *std::min_element(word.begin(), word.end());
  if (cmin < 1) throw std::invalid_argument("anneal_energy: entries must be >= 1");
  AnnealConfig cfg{spec, static_cast<int>(word.size()), cmax};
  return Chain(cfg).full_energy(word);
}

AnnealResult anneal_search(const AnnealConfig& config, int threads) {
  if (config.period < 1) throw std::invalid_argument("anneal_search: period must be >= 1");
  if (config.max_color < 1) throw std::invalid_argument("anneal_search: max_color must be >= 1");

  std::vector<RestartResult> results(static_cast<size_t>(config.restarts));
  auto run_range = [&](int from, int stride) {
    for (int r = from; r < config.restarts; r += stride)
      results[static_cast<size_t>(r)] = run_restart(config, config.seed + static_cast<uint64_t>(r));
  };
  if (threads <= 1 || config.restarts == 1) {
    run_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    int n = std::min(threads, config.restarts);
    for (int w = 0; w < n; ++w) pool.emplace_back(run_range, w, n);
    for (auto& th : pool) th.join();
  }

  AnnealResult out;
  int best = 0;
  for (int r = 1; r < config.restarts; ++r)
    if (results[static_cast<size_t>(r)].best_energy <
        results[static_cast<size_t>(best)].best_energy)
      best = r;  // ties keep the lowest restart index
  out.best_word = results[static_cast<size_t>(best)].best_word;
  out.best_energy = results[static_cast<size_t>(best)].best_energy;
  out.best_restart = best;
  out.trace = std::move(results[static_cast<size_t>(best)].trace);
  for (const auto& r : results) out.steps += r.steps;
  if (out.best_energy == 0) {
    PeriodicColoring col{config.spec, out.best_word};
    out.valid = !verify_periodic(col).has_value();
    if (!out.valid)
      throw std::logic_error("anneal: zero-energy word rejected by the verifier");
  }
  return out;
}

}  // namespace packing
