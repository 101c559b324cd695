// Exit-code contract tests: the CLI is driven as a subprocess, since
// exit codes are the only machine contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PACKING_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

const std::string kData = PACKING_DATA_DIR;
const std::string kTmpLedger = "/tmp/packing_cli_test_ledger.ndjson";

struct LedgerCleaner {
  LedgerCleaner() { std::remove(kTmpLedger.c_str()); }
  ~LedgerCleaner() { std::remove(kTmpLedger.c_str()); }
} cleaner;

std::string with_ledger(const std::string& args) { return args + " --ledger " + kTmpLedger; }

}  // namespace

TEST_CASE("cli: dist") {
  auto r = run_cli(with_ledger("dist --t 5 0 7"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("3") != std::string::npos);
}

TEST_CASE("cli: verify valid pattern exits 0") {
  auto r = run_cli(with_ledger("verify --t 4 --pattern " + kData + "/lemma5_t4_p320.pat"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("valid") != std::string::npos);
}

TEST_CASE("cli: verify rejecting pattern exits 1, bad file exits 2") {
  std::ofstream bad("/tmp/packing_bad.pat");
  bad << "t=2 period=1 colors=1\n1\n";
  bad.close();
  auto r = run_cli(with_ledger("verify --pattern /tmp/packing_bad.pat"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("violation") != std::string::npos);

  std::ofstream malformed("/tmp/packing_malformed.pat");
  malformed << "t=2 period=3 colors=1\n1 1\n";
  malformed.close();
  auto r2 = run_cli(with_ledger("verify --pattern /tmp/packing_malformed.pat"));
  CHECK(r2.exit_code == 2);

  auto r3 = run_cli(with_ledger("verify --t 5 --pattern " + kData + "/lemma5_t4_p320.pat"));
  CHECK(r3.exit_code == 2);  // header says t=4
}

TEST_CASE("cli: lb exit codes") {
  // infeasible -> 1 (three mutually adjacent vertices, one color)
  auto inf = run_cli(with_ledger("lb --t 2 --colors 1 --length 3"));
  CHECK(inf.exit_code == 1);
  CHECK(inf.output.find("infeasible") != std::string::npos);
  CHECK(inf.output.find(">= 2") != std::string::npos);

  // feasible -> 0
  auto feas = run_cli(with_ledger("lb --t 2 --colors 8 --length 20"));
  CHECK(feas.exit_code == 0);

  // budget exceeded -> 3
  auto budget = run_cli(with_ledger("lb --t 5 --colors 11 --length 134 --budget-nodes 1000"));
  CHECK(budget.exit_code == 3);
}

TEST_CASE("cli: find writes a verified witness") {
  auto r = run_cli(with_ledger("find --t 3 --colors 9 --length 30 --out /tmp/packing_witness.fin"));
  CHECK(r.exit_code == 0);
  std::ifstream w("/tmp/packing_witness.fin");
  std::string header;
  std::getline(w, header);
  CHECK(header.find("t=3") != std::string::npos);
  CHECK(header.find("length=30") != std::string::npos);
}

TEST_CASE("cli: density reaches the t=6 verdict with exit 1") {
  auto r = run_cli(with_ledger("density --t 6 --colors 14 --split 4 --window 41"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("0.999771") != std::string::npos);
  CHECK(r.output.find(">= 15") != std::string::npos);
}

TEST_CASE("cli: density with assumed window maximum") {
  auto r = run_cli(
      with_ledger("density --t 8 --colors 14 --split 6 --window 58 --assume-max 50"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("0.999110") != std::string::npos);
  CHECK(r.output.find("unverified-paper-value") != std::string::npos);
}

TEST_CASE("cli: density without verdict exits 0") {
  auto r = run_cli(with_ledger("density --t 6 --colors 14 --split 1 --window 2"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("no conclusion") != std::string::npos);
}

TEST_CASE("cli: maxcolor small window") {
  auto r = run_cli(with_ledger("maxcolor --t 6 --colors 2 --window 10"));
  CHECK(r.exit_code == 0);

  auto b = run_cli(with_ledger("maxcolor --t 6 --colors 4 --window 41 --budget-nodes 10"));
  CHECK(b.exit_code == 3);
}

TEST_CASE("cli: grid-lb") {
  auto yes = run_cli(with_ledger("grid-lb --t 9"));
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find(">= 12") != std::string::npos);
  auto no = run_cli(with_ledger("grid-lb --t 8"));
  CHECK(no.exit_code == 1);
  CHECK(no.output.find("no grid bound") != std::string::npos);
}

TEST_CASE("cli: construct t=25 writes a verified pattern") {
  auto r = run_cli(with_ledger("construct --t 25 --lattice " + kData +
                               "/lattice24.pat --out /tmp/packing_t25.pat --report"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verified") != std::string::npos);
  auto v = run_cli(with_ledger("verify --t 25 --pattern /tmp/packing_t25.pat"));
  CHECK(v.exit_code == 0);

  // too-small t is a usage/input error
  auto bad = run_cli(with_ledger("construct --t 47 --lattice " + kData + "/lattice24.pat"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: anneal records seeds and respects determinism") {
  auto r1 = run_cli(with_ledger("anneal --t 2 --period 22 --colors 9 --seed 7 --restarts 3"));
  auto r2 = run_cli(with_ledger("anneal --t 2 --period 22 --colors 9 --seed 7 --restarts 3"));
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);

  // generated seeds are announced (and recorded in the ledger)
  auto r3 = run_cli(with_ledger("anneal --t 2 --period 3 --colors 2 --restarts 1 --tmin 0.5"));
  CHECK(r3.output.find("seed:") != std::string::npos);
}

TEST_CASE("cli: cached verdicts are served from the ledger") {
  const std::string ledger = "/tmp/packing_cached_test.ndjson";
  std::remove(ledger.c_str());
  auto first = run_cli("lb --t 2 --colors 1 --length 3 --ledger " + ledger);
  CHECK(first.exit_code == 1);
  auto second = run_cli("lb --t 2 --colors 1 --length 3 --cached --ledger " + ledger);
  CHECK(second.exit_code == 1);
  CHECK(second.output.find("cached") != std::string::npos);
  std::remove(ledger.c_str());
}

TEST_CASE("cli: checkpointed lb run resumes to the same verdict") {
  const std::string ck = "/tmp/packing_cli_ck.blob";
  std::remove(ck.c_str());
  // the t=4/8-color/50-window search takes ~1.4e5 nodes, so a 2000-node
  // budget checkpoints mid-run
  auto partial = run_cli(with_ledger("lb --t 4 --colors 8 --length 50 --budget-nodes 2000 --checkpoint " + ck));
  CHECK(partial.exit_code == 3);
  std::ifstream blob(ck);
  CHECK(blob.good());
  auto resumed = run_cli(with_ledger("lb --t 4 --colors 8 --length 50 --checkpoint " + ck));
  CHECK(resumed.exit_code == 1);
  CHECK(resumed.output.find("infeasible") != std::string::npos);
  std::remove(ck.c_str());
}

TEST_CASE("cli: checkpoint with threads > 1 is a usage error") {
  auto r = run_cli(with_ledger("lb --t 4 --colors 5 --length 20 --threads 2 --checkpoint /tmp/x.blob"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: ledger-check flags tampering") {
  const std::string ledger = "/tmp/packing_tamper.ndjson";
  std::remove(ledger.c_str());
  run_cli("dist --t 5 0 7 --ledger " + ledger);
  auto ok = run_cli("ledger-check --ledger " + ledger);
  CHECK(ok.exit_code == 0);
  std::ofstream app(ledger, std::ios::app);
  app << "{\"command\":\"dist\",\"checksum\":\"0\"}\n";
  app.close();
  auto bad = run_cli("ledger-check --ledger " + ledger);
  CHECK(bad.exit_code == 1);
  std::remove(ledger.c_str());
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("lb --t 1 --colors 2 --length 3").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code != 0);
  CHECK(run_cli("lb").exit_code == 2);
}
