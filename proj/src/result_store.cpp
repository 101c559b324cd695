#include "packing/result_store.hpp"

#include <fstream>
#include <stdexcept>

namespace packing {

namespace {

// canonical form: the record serialized with sorted keys and no checksum
std::string canonical(const ResultRecord& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["verdict"] = r.verdict;
  j["counters"] = r.counters;
  j["artifacts"] = r.artifacts;
  return j.dump();  // nlohmann::json orders object keys
}

std::optional<ResultRecord> parse_line(const std::string& line, bool* intact) {
  *intact = false;
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.contains("checksum")) return std::nullopt;
  ResultRecord r;
  r.command = j.value("command", "");
  r.params = j.value("params", nlohmann::json::object());
  r.verdict = j.value("verdict", "");
  r.counters = j.value("counters", nlohmann::json::object());
  r.artifacts = j.value("artifacts", nlohmann::json::object());
  std::string sum = j["checksum"].is_string() ? j["checksum"].get<std::string>() : "";
  *intact = sum == std::to_string(fnv1a64_string(canonical(r)));
  return r;
}

}  // namespace

uint64_t fnv1a64_string(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ResultStore::ResultStore(std::string path) : path_(std::move(path)) {}

void ResultStore::append(const ResultRecord& record) {
  nlohmann::json j;
  j["command"] = record.command;
  j["params"] = record.params;
  j["verdict"] = record.verdict;
  j["counters"] = record.counters;
  j["artifacts"] = record.artifacts;
  j["checksum"] = std::to_string(fnv1a64_string(canonical(record)));
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("result store: cannot open " + path_);
  out << j.dump() << "\n";
}

std::optional<ResultRecord> ResultStore::find_cached(const std::string& command,
                                                     const nlohmann::json& params) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<ResultRecord> hit;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    bool intact = false;
    auto r = parse_line(line, &intact);
    if (r && intact && r->command == command && r->params == params) hit = r;
  }
  return hit;
}

std::vector<int> ResultStore::corrupt_lines() const {
  std::vector<int> bad;
  std::ifstream in(path_);
  if (!in) return bad;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.empty()) continue;
    bool intact = false;
    parse_line(line, &intact);
    if (!intact) bad.push_back(no);
  }
  return bad;
}

}  // namespace packing
