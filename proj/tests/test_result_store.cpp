#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "packing/result_store.hpp"

using namespace packing;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/packing_test_" + name) {
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

ResultRecord sample(int k) {
  ResultRecord r;
  r.command = "lb";
  r.params = {{"t", 5}, {"colors", 11}, {"length", k}};
  r.verdict = "infeasible";
  r.counters = {{"nodes", 12345}, {"elapsed", 1.5}};
  r.artifacts = nlohmann::json::object();
  return r;
}

}  // namespace

TEST_CASE("result store: append and cached lookup") {
  TempFile tmp("store1");
  ResultStore store(tmp.path);
  CHECK(!store.find_cached("lb", sample(134).params).has_value());

  store.append(sample(134));
  store.append(sample(50));
  auto hit = store.find_cached("lb", sample(134).params);
  REQUIRE(hit.has_value());
  CHECK(hit->verdict == "infeasible");
  CHECK(hit->counters["nodes"] == 12345);
  CHECK(!store.find_cached("lb", {{"t", 6}}).has_value());
  CHECK(store.corrupt_lines().empty());
}

TEST_CASE("result store: the latest matching record wins") {
  TempFile tmp("store2");
  ResultStore store(tmp.path);
  auto rec = sample(134);
  store.append(rec);
  rec.verdict = "feasible";
  store.append(rec);
  auto hit = store.find_cached("lb", rec.params);
  REQUIRE(hit.has_value());
  CHECK(hit->verdict == "feasible");
}

TEST_CASE("result store: tampering is detected by the per-entry checksum") {
  TempFile tmp("store3");
  ResultStore store(tmp.path);
  store.append(sample(134));
  store.append(sample(135));

  // flip a verdict byte in line 1
  std::ifstream in(tmp.path);
  std::string l1, l2;
  std::getline(in, l1);
  std::getline(in, l2);
  in.close();
  auto pos = l1.find("infeasible");
  REQUIRE(pos != std::string::npos);
  l1.replace(pos, 10, "feasible!!");
  std::ofstream out(tmp.path, std::ios::trunc);
  out << l1 << "\n" << l2 << "\n";
  out.close();

  auto bad = store.corrupt_lines();
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == 1);
  // a tampered record is not served from the cache
  CHECK(!store.find_cached("lb", sample(134).params).has_value());
  CHECK(store.find_cached("lb", sample(135).params).has_value());
}
