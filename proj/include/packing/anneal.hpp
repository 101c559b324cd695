// anneal.hpp
//
// Simulated annealing over fixed-period words: the stochastic search
// used to discover repeating packing colorings of D(1,t).

#pragma once

#include <cstdint>
#include <vector>

#include "packing/pattern.hpp"

namespace packing {

struct AnnealConfig {
  DistanceSpec spec;
  int period;
  int max_color;
  uint64_t seed = 1;
  // 0 = calibrate so roughly 80% of uphill moves accept initially
  double initial_temperature = 0.0;
  double cooling = 0.999;        // geometric factor per level
  int steps_per_level = 0;       // 0 = 10 * period
  double min_temperature = 1e-3;
  int restarts = 1;
};

struct TracePoint {
  uint64_t step;
  double temperature;
  long long energy;
};

struct AnnealResult {
  std::vector<int> best_word;
  long long best_energy = -1;
  int best_restart = 0;
  uint64_t steps = 0;
  bool valid = false;  // best_energy == 0 and verify_periodic accepted
  std::vector<TracePoint> trace;  // one point per temperature level of the best restart
};

// Number of violating same-color pairs, counted once per translation
// class: pairs (i, i+n) with i in [0, period), n in [1, v*t],
// c(i) = c(i+n) = v and distance(0,n) <= v on the induced coloring of Z.
// Zero exactly when verify_periodic accepts the word.
long long anneal_energy(const DistanceSpec& spec, const std::vector<int>& word);

// Metropolis acceptance over single-position recolorings, geometric
// cooling, deterministic for a fixed seed. Restarts use seeds
// seed + restart index and may run concurrently; the reported best is
// the lowest energy with the lowest restart index as tiebreak.
AnnealResult anneal_search(const AnnealConfig& config, int threads = 1);

}  // namespace packing
