#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgt/perm_group.hpp"

namespace fgt {

struct ConjugacyClass {
  Elem rep;                  // smallest index in the class
  std::vector<Elem> members; // sorted
};

// Classes ordered by representative index.
std::vector<ConjugacyClass> conjugacy_classes(const ElementTable& t);
// Class id per element, matching the order of conjugacy_classes().
std::vector<std::uint32_t> class_ids(const ElementTable& t);

std::vector<Elem> center(const ElementTable& t);

// Subgroup generated by gens, as sorted element indices.
std::vector<Elem> subgroup_closure(const ElementTable& t, const std::vector<Elem>& gens);
// Smallest normal subgroup containing gens, normalized by the group generators
// (or by `under` when non-empty).
std::vector<Elem> normal_closure(const ElementTable& t, const std::vector<Elem>& gens,
                                 const std::vector<Elem>& under = {});
// A short generating set of a subgroup, chosen greedily in index order.
std::vector<Elem> subgroup_generators(const ElementTable& t, const std::vector<Elem>& sub);

bool is_normal(const ElementTable& t, const std::vector<Elem>& sub);

std::vector<Elem> derived_subgroup(const ElementTable& t);
// |G|, |G'|, |G''|, ... ending at the first repeated value.
std::vector<std::uint64_t> derived_orders(const ElementTable& t);

// Right-coset action of G on N\G (N normal). Generator names are kept.
PermutationGroup quotient_by_normal(const ElementTable& t, const std::vector<Elem>& normal,
                                    const std::vector<std::string>& names = {});

struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t ncl = 0;
  std::uint64_t center_order = 0;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  std::vector<std::uint64_t> derived_orders;

  // "[576](54,4)"
  std::string label() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const ElementTable& t);

}  // namespace fgt
