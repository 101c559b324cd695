// packing_cli.cpp
//
// Command-line interface over the packing-coloring toolkit.
//
// Exit codes (the machine contract; textual output may evolve):
//   0  success / valid / feasible as requested
//   1  invalid / infeasible / verdict reached
//   2  usage or input error
//   3  budget exceeded (indeterminate)

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "packing/anneal.hpp"
#include "packing/constructor.hpp"
#include "packing/density.hpp"
#include "packing/lb_search.hpp"
#include "packing/pattern.hpp"
#include "packing/repro.hpp"
#include "packing/result_store.hpp"
#include "packing/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string default_data_dir() {
  if (const char* env = std::getenv("PACKING_DATA_DIR")) return env;
  return "data";
}

struct Common {
  std::string ledger_path = "packing_results.ndjson";
  bool no_ledger = false;
  bool cached = false;
  bool json_output = false;
  int threads = 1;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--ledger", common.ledger_path, "result ledger file (line-delimited JSON)");
  cmd->add_flag("--no-ledger", common.no_ledger, "do not append a run record");
  cmd->add_flag("--cached", common.cached, "serve an identical prior run from the ledger");
  cmd->add_flag("--json", common.json_output, "print the machine-readable record to stdout");
  cmd->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
}

// appends to the ledger (unless disabled) and prints the record if asked
void record(const Common& common, const packing::ResultRecord& rec) {
  if (common.json_output) {
    nlohmann::json j{{"command", rec.command},
                     {"params", rec.params},
                     {"verdict", rec.verdict},
                     {"counters", rec.counters},
                     {"artifacts", rec.artifacts}};
    std::cout << j.dump() << "\n";
  }
  if (!common.no_ledger) packing::ResultStore(common.ledger_path).append(rec);
}

std::optional<std::string> cached_verdict(const Common& common, const std::string& command,
                                          const nlohmann::json& params) {
  if (!common.cached) return std::nullopt;
  auto hit = packing::ResultStore(common.ledger_path).find_cached(command, params);
  if (!hit) return std::nullopt;
  std::cout << "cached: " << hit->verdict << "\n";
  return hit->verdict;
}

// feasible -> 0; infeasible -> 1 (for lb this is the bound verdict);
// indeterminate -> 3
int exit_for_search_verdict(const std::string& verdict) {
  if (verdict == "indeterminate") return kExitBudget;
  if (verdict == "feasible") return kExitOk;
  return kExitVerdict;
}

uint64_t file_fnv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return packing::fnv1a64_string(data);
}

std::string status_name(packing::SearchStatus st) {
  switch (st) {
    case packing::SearchStatus::feasible: return "feasible";
    case packing::SearchStatus::infeasible: return "infeasible";
    default: return "indeterminate";
  }
}

// ---- search commands (lb / find) ----------------------------------------

struct SearchArgs {
  int t = 0;
  int colors = 0;
  int length = 0;
  int fix_first = -1;  // -1: command default
  bool no_fix_first = false;
  uint64_t budget_nodes = 0;
  double budget_seconds = 86400.0;
  std::string checkpoint_file;
  std::string witness_file;
};

void add_search_options(CLI::App* cmd, SearchArgs& args, bool is_lb) {
  cmd->add_option("--t", args.t, "jump length t of D(1,t)")->required()->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--colors", args.colors, "maximum color c")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--length", args.length, "window length k")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--fix-first", args.fix_first, "force this color at position 1");
  if (is_lb)
    cmd->add_flag("--no-fix-first", args.no_fix_first,
                  "search without pinning position 1 (default pins color c)");
  cmd->add_option("--budget-nodes", args.budget_nodes, "node budget (0 = unlimited)");
  cmd->add_option("--budget-time", args.budget_seconds, "wall-clock budget in seconds");
  cmd->add_option("--checkpoint", args.checkpoint_file,
                  "resume from / periodically save a checkpoint blob (single-threaded only)");
  cmd->add_option("--out", args.witness_file, "write a feasible witness to this file");
}

std::vector<uint8_t> read_blob(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_blob_atomic(const std::string& path, const std::vector<uint8_t>& blob) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(blob.data()),
              static_cast<std::streamsize>(blob.size()));
  }
  std::filesystem::rename(tmp, path);
}

int run_search(const Common& common, const SearchArgs& args, bool is_lb) {
  using namespace packing;
  std::optional<int> fix;
  if (args.fix_first > 0) fix = args.fix_first;
  else if (is_lb && !args.no_fix_first) fix = args.colors;

  nlohmann::json params{{"t", args.t},
                        {"colors", args.colors},
                        {"length", args.length},
                        {"fix_first", fix ? *fix : 0}};
  const std::string command = is_lb ? "lb" : "find";
  if (auto verdict = cached_verdict(common, command, params))
    return exit_for_search_verdict(*verdict);

  if (!args.checkpoint_file.empty() && common.threads > 1) {
    std::cerr << "error: --checkpoint requires --threads 1\n";
    return kExitUsage;
  }

  SearchProblem problem{DistanceSpec(args.t), args.colors, args.length, fix};
  SearchLimits limits{args.budget_nodes, args.budget_seconds};
  SearchOutcome out;

  if (!args.checkpoint_file.empty()) {
    // chunked run so the checkpoint file stays fresh across restarts
    bool resuming = std::filesystem::exists(args.checkpoint_file);
    auto total_deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration<double>(args.budget_seconds);
    std::vector<uint8_t> blob;
    if (resuming) {
      blob = read_blob(args.checkpoint_file);
      auto embedded = checkpoint_problem(blob);
      if (embedded.spec.t != args.t || embedded.max_color != args.colors ||
          embedded.length != args.length) {
        std::cerr << "error: checkpoint was produced for different parameters\n";
        return kExitUsage;
      }
    }
    while (true) {
      double remaining =
          std::chrono::duration<double>(total_deadline - std::chrono::steady_clock::now())
              .count();
      SearchLimits chunk{args.budget_nodes, std::min(remaining, 60.0)};
      out = blob.empty() ? prove(problem, chunk, 1) : resume(blob, chunk);
      if (out.status != SearchStatus::indeterminate) break;
      write_blob_atomic(args.checkpoint_file, out.checkpoint);
      blob = out.checkpoint;
      if (remaining <= 60.0 || (args.budget_nodes && out.nodes >= args.budget_nodes)) break;
    }
  } else {
    out = is_lb ? prove(problem, limits, common.threads)
                : find_coloring(problem, limits, common.threads);
  }

  std::string verdict = status_name(out.status);
  std::cout << command << " t=" << args.t << " colors=" << args.colors
            << " length=" << args.length << (fix ? " fix_first=" + std::to_string(*fix) : "")
            << ": " << verdict << " (nodes=" << out.nodes << ", " << out.elapsed_seconds
            << " s)\n";
  if (is_lb && out.status == SearchStatus::infeasible)
    std::cout << "chi_rho(D(1," << args.t << ")) >= " << args.colors + 1 << "\n";

  ResultRecord rec{command, params, verdict,
                   {{"nodes", out.nodes}, {"elapsed_seconds", out.elapsed_seconds}},
                   nlohmann::json::object()};
  if (out.witness && !args.witness_file.empty()) {
    std::ofstream w(args.witness_file);
    w << write_finite(*out.witness);
    w.close();
    rec.artifacts["witness"] = {{"path", args.witness_file},
                                {"fnv64", std::to_string(file_fnv(args.witness_file))}};
  }
  record(common, rec);
  return exit_for_search_verdict(verdict);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace packing;
  CLI::App app{"packing coloring toolkit for integer distance graphs D(1,t)"};
  app.set_version_flag("--version", std::string("packing ") + kVersion);
  app.require_subcommand(1);

  // ---- dist ----
  struct {
    int t = 0;
    long long a = 0, b = 0;
  } dist_args;
  Common dist_common;
  auto* cmd_dist = app.add_subcommand("dist", "graph distance between two vertices");
  cmd_dist->add_option("--t", dist_args.t)->required()->check(CLI::Range(2, 1 << 20));
  cmd_dist->add_option("a", dist_args.a)->required();
  cmd_dist->add_option("b", dist_args.b)->required();
  add_common(cmd_dist, dist_common);

  // ---- verify ----
  struct {
    int t = 0;
    std::string pattern_file;
  } verify_args;
  Common verify_common;
  auto* cmd_verify = app.add_subcommand("verify", "verify a periodic pattern file");
  cmd_verify->add_option("--t", verify_args.t, "expected t (cross-checked with the header)");
  cmd_verify->add_option("--pattern", verify_args.pattern_file, "pattern file")->required();
  add_common(cmd_verify, verify_common);

  // ---- lb / find ----
  SearchArgs lb_args, find_args;
  Common lb_common, find_common;
  auto* cmd_lb = app.add_subcommand("lb", "exhaustive infeasibility search: prove chi_rho > c");
  add_search_options(cmd_lb, lb_args, true);
  add_common(cmd_lb, lb_common);
  auto* cmd_find = app.add_subcommand("find", "search for a window coloring (feasible side)");
  add_search_options(cmd_find, find_args, false);
  add_common(cmd_find, find_common);

  // ---- maxcolor ----
  struct {
    int t = 0;
    int colors = 0;
    long long window = 0;
    uint64_t budget_nodes = 0;
    double budget_seconds = 86400.0;
    std::string certificate_file;
  } maxcolor_args;
  Common maxcolor_common;
  auto* cmd_maxcolor =
      app.add_subcommand("maxcolor", "exact maximum colorable positions in a window");
  cmd_maxcolor->add_option("--t", maxcolor_args.t)->required()->check(CLI::Range(2, 1 << 20));
  cmd_maxcolor->add_option("--colors", maxcolor_args.colors, "color set {1..l}")->required();
  cmd_maxcolor->add_option("--window", maxcolor_args.window, "window length m")->required();
  cmd_maxcolor->add_option("--budget-nodes", maxcolor_args.budget_nodes);
  cmd_maxcolor->add_option("--budget-time", maxcolor_args.budget_seconds);
  cmd_maxcolor->add_option("--out", maxcolor_args.certificate_file, "write the certificate");
  add_common(cmd_maxcolor, maxcolor_common);

  // ---- density ----
  struct {
    int t = 0;
    int colors = 0;
    int split = 0;
    long long window = 0;
    long long assume_max = -1;
    uint64_t budget_nodes = 0;
    double budget_seconds = 86400.0;
  } density_args;
  Common density_common;
  auto* cmd_density = app.add_subcommand("density", "density ledger and lower-bound verdict");
  cmd_density->add_option("--t", density_args.t)->required()->check(CLI::Range(2, 1 << 20));
  cmd_density->add_option("--colors", density_args.colors, "total colors c")->required();
  cmd_density->add_option("--split", density_args.split, "window covers colors {1..split}")
      ->required();
  cmd_density->add_option("--window", density_args.window, "window length m")->required();
  cmd_density->add_option("--assume-max", density_args.assume_max,
                          "externally supplied window maximum (recorded as unverified)");
  cmd_density->add_option("--budget-nodes", density_args.budget_nodes);
  cmd_density->add_option("--budget-time", density_args.budget_seconds);
  add_common(cmd_density, density_common);

  // ---- construct ----
  struct {
    int t = 0;
    std::string lattice_file;
    std::string out_file;
    bool print_report = false;
  } construct_args;
  Common construct_common;
  auto* cmd_construct =
      app.add_subcommand("construct", "build and verify a periodic coloring for large t");
  cmd_construct->add_option("--t", construct_args.t)->required()->check(CLI::Range(2, 1 << 20));
  cmd_construct->add_option("--lattice", construct_args.lattice_file,
                            "24x24 lattice pattern file");
  cmd_construct->add_option("--out", construct_args.out_file, "output pattern file");
  cmd_construct->add_flag("--report", construct_args.print_report, "print the segment table");
  add_common(cmd_construct, construct_common);

  // ---- anneal ----
  struct {
    int t = 0;
    int period = 0;
    int colors = 0;
    uint64_t seed = 0;
    bool seed_given = false;
    int restarts = 1;
    int steps = 0;
    double cool = 0.999;
    double t0 = 0.0;
    double tmin = 1e-3;
    std::string out_file;
    std::string trace_file;
  } anneal_args;
  Common anneal_common;
  auto* cmd_anneal = app.add_subcommand("anneal", "simulated annealing pattern search");
  cmd_anneal->add_option("--t", anneal_args.t)->required()->check(CLI::Range(2, 1 << 20));
  cmd_anneal->add_option("--period", anneal_args.period)->required()->check(CLI::PositiveNumber);
  cmd_anneal->add_option("--colors", anneal_args.colors)->required()->check(CLI::PositiveNumber);
  auto* seed_opt = cmd_anneal->add_option("--seed", anneal_args.seed, "RNG seed");
  cmd_anneal->add_option("--restarts", anneal_args.restarts)->check(CLI::PositiveNumber);
  cmd_anneal->add_option("--steps", anneal_args.steps, "steps per temperature level");
  cmd_anneal->add_option("--cool", anneal_args.cool, "geometric cooling factor");
  cmd_anneal->add_option("--t0", anneal_args.t0, "initial temperature (0 = calibrate)");
  cmd_anneal->add_option("--tmin", anneal_args.tmin, "stop temperature");
  cmd_anneal->add_option("--out", anneal_args.out_file, "write an energy-0 word here");
  cmd_anneal->add_option("--trace", anneal_args.trace_file, "write step/temperature/energy");
  add_common(cmd_anneal, anneal_common);

  // ---- grid-lb ----
  struct {
    int t = 0;
  } grid_args;
  Common grid_common;
  auto* cmd_grid = app.add_subcommand("grid-lb", "square-lattice lower bound via grid embedding");
  cmd_grid->add_option("--t", grid_args.t)->required()->check(CLI::Range(2, 1 << 20));
  add_common(cmd_grid, grid_common);

  // ---- repro ----
  struct {
    std::string tier = "desk";
    std::string data_dir;
    std::string long_job;
  } repro_args;
  Common repro_common;
  auto* cmd_repro = app.add_subcommand("repro", "run the reproduction suite");
  cmd_repro->add_option("--tier", repro_args.tier)->check(CLI::IsMember({"desk", "long"}));
  cmd_repro->add_option("--data", repro_args.data_dir, "data directory");
  cmd_repro->add_option("--job", repro_args.long_job,
                        "long-tier job: window-t8, lb-t4, lb-t7, lb-t9");
  add_common(cmd_repro, repro_common);

  // ---- ledger-check ----
  struct {
    std::string path = "packing_results.ndjson";
  } ledgercheck_args;
  auto* cmd_ledgercheck = app.add_subcommand("ledger-check", "verify ledger checksums");
  cmd_ledgercheck->add_option("--ledger", ledgercheck_args.path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // help exits 0, any parse failure is usage
  }

  try {
    if (cmd_dist->parsed()) {
      int d = distance(DistanceSpec(dist_args.t), dist_args.a, dist_args.b);
      std::cout << d << "\n";
      record(dist_common, ResultRecord{"dist",
                                       {{"t", dist_args.t}, {"a", dist_args.a}, {"b", dist_args.b}},
                                       std::to_string(d),
                                       nlohmann::json::object(),
                                       nlohmann::json::object()});
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      PeriodicColoring col = read_pattern_file(verify_args.pattern_file);
      if (verify_args.t != 0 && col.spec.t != verify_args.t) {
        std::cerr << "error: pattern file has t=" << col.spec.t << ", expected "
                  << verify_args.t << "\n";
        return kExitUsage;
      }
      auto violation = verify_periodic(col, verify_common.threads);
      nlohmann::json params{{"pattern", verify_args.pattern_file},
                            {"t", col.spec.t},
                            {"period", col.period()},
                            {"colors", col.color_count()}};
      nlohmann::json counters = nlohmann::json::object();
      std::string verdict = violation ? "violation" : "valid";
      if (violation) {
        std::cout << "violation: positions (" << violation->i << ", " << violation->j
                  << ") color " << violation->color << " distance " << violation->distance
                  << "\n";
        counters = {{"i", violation->i},
                    {"j", violation->j},
                    {"color", violation->color},
                    {"distance", violation->distance}};
      } else {
        std::cout << "valid: " << col.period() << "-periodic packing "
                  << col.color_count() << "-coloring of D(1," << col.spec.t << ")\n";
      }
      record(verify_common,
             ResultRecord{"verify", params, verdict, counters,
                          {{"pattern", {{"path", verify_args.pattern_file},
                                        {"fnv64", std::to_string(file_fnv(verify_args.pattern_file))}}}}});
      return violation ? kExitVerdict : kExitOk;
    }

    if (cmd_lb->parsed()) return run_search(lb_common, lb_args, true);
    if (cmd_find->parsed()) return run_search(find_common, find_args, false);

    if (cmd_maxcolor->parsed()) {
      nlohmann::json params{{"t", maxcolor_args.t},
                            {"colors", maxcolor_args.colors},
                            {"window", maxcolor_args.window}};
      if (auto verdict = cached_verdict(maxcolor_common, "maxcolor", params))
        return *verdict == "indeterminate" ? kExitBudget : kExitOk;
      auto wb = max_colorable(DistanceSpec(maxcolor_args.t), maxcolor_args.colors,
                              maxcolor_args.window,
                              SearchLimits{maxcolor_args.budget_nodes, maxcolor_args.budget_seconds});
      if (!wb) {
        std::cout << "indeterminate (budget exceeded)\n";
        record(maxcolor_common, ResultRecord{"maxcolor", params, "indeterminate",
                                             nlohmann::json::object(), nlohmann::json::object()});
        return kExitBudget;
      }
      std::cout << "max colorable: " << wb->max_colored << " of " << wb->window
                << " positions using colors 1.." << maxcolor_args.colors << " (nodes="
                << wb->nodes << ")\n";
      ResultRecord rec{"maxcolor", params, std::to_string(wb->max_colored),
                       {{"nodes", wb->nodes}, {"elapsed_seconds", wb->elapsed_seconds}},
                       nlohmann::json::object()};
      if (!maxcolor_args.certificate_file.empty()) {
        std::ofstream out(maxcolor_args.certificate_file);
        out << write_finite(wb->certificate);
        out.close();
        rec.artifacts["certificate"] = {{"path", maxcolor_args.certificate_file},
                                        {"fnv64", std::to_string(file_fnv(maxcolor_args.certificate_file))}};
      }
      record(maxcolor_common, rec);
      return kExitOk;
    }

    if (cmd_density->parsed()) {
      nlohmann::json params{{"t", density_args.t},
                            {"colors", density_args.colors},
                            {"split", density_args.split},
                            {"window", density_args.window},
                            {"assume_max", density_args.assume_max}};
      if (auto verdict = cached_verdict(density_common, "density", params))
        return *verdict == "verdict" ? kExitVerdict
                                     : (*verdict == "indeterminate" ? kExitBudget : kExitOk);
      DistanceSpec spec(density_args.t);
      WindowBound wb{spec, 0, 0, 0, FiniteColoring{spec, 0, {}}, "", 0, 0};
      if (density_args.assume_max >= 0) {
        wb = assumed_window_bound(spec, density_args.split, density_args.window,
                                  density_args.assume_max);
      } else {
        auto computed =
            max_colorable(spec, density_args.split, density_args.window,
                          SearchLimits{density_args.budget_nodes, density_args.budget_seconds});
        if (!computed) {
          std::cout << "indeterminate (budget exceeded computing the window maximum)\n";
          record(density_common, ResultRecord{"density", params, "indeterminate",
                                              nlohmann::json::object(), nlohmann::json::object()});
          return kExitBudget;
        }
        wb = *computed;
      }
      auto ledger = combine(spec, density_args.colors, density_args.split, wb);
      std::cout << ledger.report();
      std::string verdict = ledger.verdict ? "verdict" : "no-verdict";
      record(density_common,
             ResultRecord{"density", params, verdict,
                          {{"total", ledger.total.to_fraction_string()},
                           {"decimal", ledger.total.to_decimal_string(6)},
                           {"window_max", wb.max_colored},
                           {"provenance", wb.provenance},
                           {"implied_lower_bound", ledger.implied_lower_bound}},
                          nlohmann::json::object()});
      return ledger.verdict ? kExitVerdict : kExitOk;
    }

    if (cmd_construct->parsed()) {
      std::string lattice_path = construct_args.lattice_file.empty()
                                     ? default_data_dir() + "/lattice24.pat"
                                     : construct_args.lattice_file;
      auto lattice = LatticePattern::load_file(lattice_path);
      Assembly assembly =
          assemble(DistanceSpec(construct_args.t), lattice, construct_common.threads);
      std::string out_path = construct_args.out_file.empty()
                                 ? "construct_t" + std::to_string(construct_args.t) + ".pat"
                                 : construct_args.out_file;
      std::ofstream out(out_path);
      out << "# verified periodic packing coloring of D(1," << construct_args.t << ")\n";
      out << write_pattern(assembly.coloring);
      out.close();
      if (construct_args.print_report) std::cout << report_text(assembly.report);
      std::cout << "verified coloring for t=" << construct_args.t
                << ": period=" << assembly.report.period
                << " max_color=" << assembly.report.max_color << " -> " << out_path << "\n";
      record(construct_common,
             ResultRecord{"construct",
                          {{"t", construct_args.t}, {"lattice", lattice_path}},
                          "verified",
                          {{"period", assembly.report.period},
                           {"max_color", assembly.report.max_color},
                           {"deviations", assembly.report.deviations.size()}},
                          {{"pattern", {{"path", out_path},
                                        {"fnv64", std::to_string(file_fnv(out_path))}}}}});
      return kExitOk;
    }

    if (cmd_anneal->parsed()) {
      if (!*seed_opt) {
        anneal_args.seed = std::random_device{}();
        std::cout << "seed: " << anneal_args.seed << " (generated; recorded in the ledger)\n";
      }
      AnnealConfig cfg{DistanceSpec(anneal_args.t), anneal_args.period, anneal_args.colors};
      cfg.seed = anneal_args.seed;
      cfg.restarts = anneal_args.restarts;
      cfg.steps_per_level = anneal_args.steps;
      cfg.cooling = anneal_args.cool;
      cfg.initial_temperature = anneal_args.t0;
      cfg.min_temperature = anneal_args.tmin;
      auto res = anneal_search(cfg, anneal_common.threads);
      std::cout << "best energy " << res.best_energy << " after " << res.steps
                << " steps (restart " << res.best_restart << ")\n";
      nlohmann::json artifacts = nlohmann::json::object();
      if (res.valid && !anneal_args.out_file.empty()) {
        PeriodicColoring col{cfg.spec, res.best_word};
        std::ofstream out(anneal_args.out_file);
        out << write_pattern(col);
        out.close();
        artifacts["pattern"] = {{"path", anneal_args.out_file},
                                {"fnv64", std::to_string(file_fnv(anneal_args.out_file))}};
        std::cout << "energy-0 word written to " << anneal_args.out_file << "\n";
      }
      if (!anneal_args.trace_file.empty()) {
        std::ofstream tr(anneal_args.trace_file);
        tr << "step temperature energy\n";
        for (const auto& p : res.trace)
          tr << p.step << " " << p.temperature << " " << p.energy << "\n";
      }
      record(anneal_common,
             ResultRecord{"anneal",
                          {{"t", anneal_args.t},
                           {"period", anneal_args.period},
                           {"colors", anneal_args.colors},
                           {"seed", anneal_args.seed},
                           {"restarts", anneal_args.restarts}},
                          res.valid ? "valid" : "best-energy-" + std::to_string(res.best_energy),
                          {{"steps", res.steps}, {"best_restart", res.best_restart}},
                          artifacts});
      return res.valid ? kExitOk : kExitVerdict;
    }

    if (cmd_grid->parsed()) {
      auto glb = grid_lower_bound(DistanceSpec(grid_args.t));
      std::string verdict;
      if (glb) {
        std::cout << "chi_rho(D(1," << grid_args.t << ")) >= " << glb->bound
                  << " via a verified " << glb->embedding.width << "x" << glb->embedding.height
                  << " grid embedding (x,y) -> y + x*" << grid_args.t << "\n";
        verdict = "bound-" + std::to_string(glb->bound);
      } else {
        std::cout << "no grid bound for t=" << grid_args.t << " (requires t >= 9)\n";
        verdict = "no-bound";
      }
      record(grid_common, ResultRecord{"grid-lb",
                                       {{"t", grid_args.t}},
                                       verdict,
                                       nlohmann::json::object(),
                                       nlohmann::json::object()});
      return glb ? kExitOk : kExitVerdict;
    }

    if (cmd_repro->parsed()) {
      std::string data = repro_args.data_dir.empty() ? default_data_dir() : repro_args.data_dir;
      if (repro_args.tier == "long")
        return repro::run_long_job(repro_args.long_job, data, repro_common.threads, std::cout);
      repro::DeskOptions opt{data, repro_common.threads, true};
      auto results = repro::run_desk(opt, std::cout);
      int failures = 0;
      for (const auto& r : results)
        if (!r.pass) ++failures;
      std::cout << results.size() - static_cast<size_t>(failures) << "/" << results.size()
                << " criteria passed\n";
      return failures ? kExitVerdict : kExitOk;
    }

    if (cmd_ledgercheck->parsed()) {
      auto bad = ResultStore(ledgercheck_args.path).corrupt_lines();
      if (bad.empty()) {
        std::cout << "ledger intact\n";
        return kExitOk;
      }
      for (int line : bad) std::cout << "checksum failure at line " << line << "\n";
      return kExitVerdict;
    }
  } catch (const PatternParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AssemblyError& e) {
    std::cerr << "assembly failed: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
