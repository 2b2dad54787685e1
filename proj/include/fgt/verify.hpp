#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fgt/aut.hpp"
#include "fgt/group_props.hpp"

namespace fgt {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

struct VerifyOptions {
  std::optional<std::int64_t> p;   // restrict rows to this prime
  std::vector<std::string> rows;   // restrict rows to these keys
  bool include_long_running = false;
  std::uint64_t max_order = 100000;  // largest group tabulated during a check
  std::string data_dir;              // defaults to the shipped data directory
};

struct Report {
  Json json;
  bool pass = true;
};

// Expectation records for one table, as shipped in the data directory.
Json load_expectations(const std::string& table_id, const std::string& data_dir = {});
std::vector<std::string> table_ids(const std::string& data_dir = {});
std::string default_data_dir();

Report verify_table(const std::string& table_id, const VerifyOptions& opts = {});

Json fingerprint_json(const Fingerprint& f);
Json caps_json(std::uint64_t max_order);

}  // namespace fgt
