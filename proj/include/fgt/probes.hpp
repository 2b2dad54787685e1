#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgt/verify.hpp"

namespace fgt {

// Open questions exposed as optional experiments. Each returns a JSON record
// of what was computed; nothing here is asserted.
std::vector<std::string> probe_names();
Json run_probe(const std::string& name, bool include_long_running, std::uint64_t max_order);

}  // namespace fgt
