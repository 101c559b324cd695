// repro.hpp
//
// Desk-scale reproduction suite: re-derives the toolkit's headline
// verdicts (pattern regression, lower-bound searches, density ledgers,
// constructions, closed forms) and prints one pass/fail line per
// criterion. Long jobs (multi-day searches, the 58-window maximization)
// are exposed separately behind the long tier.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packing::repro {

struct CriterionOutcome {
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct DeskOptions {
  std::string data_dir;  // directory holding lemma5_t4_p320.pat and lattice24.pat
  int threads = 1;
  bool include_slow = true;  // the t=5 lower-bound run (minutes)
};

// Runs the desk tier, streaming one line per criterion. The property
// suites driven by test-only oracles live in the acceptance binary, not
// here. Returns all outcomes.
std::vector<CriterionOutcome> run_desk(const DeskOptions& options, std::ostream& out);

// Long tier: argv-style selection of which long job to run.
// Jobs: "window-t8" (m=58 maximization), "lb-t4", "lb-t7", "lb-t9".
int run_long_job(const std::string& job, const std::string& data_dir, int threads,
                 std::ostream& out);

}  // namespace packing::repro
