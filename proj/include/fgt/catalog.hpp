#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgt/aut.hpp"
#include "fgt/spec.hpp"

namespace fgt {

struct CatalogEntry {
  std::string label;  // e.g. "Hol(Cp)×C4×C2", "D4×[144]"
  // Spec for prime p, or nothing when the entry is not defined at p.
  std::function<std::optional<GroupSpec>(std::int64_t)> instance;
};

// Fixed order, most specific labels first.
const std::vector<CatalogEntry>& catalog();

// First catalog entry isomorphic to the table's group: order and fingerprint
// prefilters, then an isomorphism search. Entries larger than cap are skipped.
std::optional<std::string> identify(const ElementTable& t, std::int64_t p,
                                    std::size_t cap = 100000);
std::optional<std::string> identify(const AutGroupResult& result, std::int64_t p,
                                    std::size_t cap = 100000);

}  // namespace fgt
