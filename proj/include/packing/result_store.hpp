// result_store.hpp
//
// Append-only ledger of command runs: line-delimited JSON records, each
// carrying an FNV-1a checksum of its canonical form.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace packing {

struct ResultRecord {
  std::string command;        // subcommand name
  nlohmann::json params;      // canonical parameters (sorted keys)
  std::string verdict;
  nlohmann::json counters;    // nodes, elapsed, ...
  nlohmann::json artifacts;   // e.g. {"pattern": {"path":..., "fnv64": ...}}
};

uint64_t fnv1a64_string(const std::string& s);

class ResultStore {
 public:
  explicit ResultStore(std::string path);

  void append(const ResultRecord& record);

  // most recent intact record with identical command+params
  std::optional<ResultRecord> find_cached(const std::string& command,
                                          const nlohmann::json& params) const;

  // 1-based line numbers whose checksum does not match
  std::vector<int> corrupt_lines() const;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace packing
