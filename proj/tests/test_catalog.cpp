#include <gtest/gtest.h>

#include "fgt/aut.hpp"
#include "fgt/catalog.hpp"
#include "fgt/group_props.hpp"
#include "fgt/spec.hpp"

using namespace fgt;

namespace {

struct Built {
  std::string label;
  ElementTable table;
  Fingerprint fp;
};

std::vector<Built> tabulated_entries(std::int64_t p) {
  std::vector<Built> out;
  for (const auto& e : catalog()) {
    auto s = e.instance(p);
    if (!s || predicted_order(*s) > default_element_cap()) continue;
    auto t = ElementTable::of(build(*s));
    auto f = fingerprint(t);
    out.push_back({e.label, std::move(t), f});
  }
  return out;
}

}  // namespace

TEST(Catalog, LabelsAreUnique) {
  std::set<std::string> seen;
  for (const auto& e : catalog()) EXPECT_TRUE(seen.insert(e.label).second) << e.label;
}

TEST(Catalog, EntriesArePairwiseNonIsomorphic) {
  for (std::int64_t p : {3, 5}) {
    auto entries = tabulated_entries(p);
    EXPECT_GE(entries.size(), 10u);
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        if (!(entries[i].fp == entries[j].fp)) continue;
        EXPECT_FALSE(is_isomorphic(entries[i].table, entries[j].table).has_value())
            << "p=" << p << " " << entries[i].label << " vs " << entries[j].label;
      }
  }
}

TEST(Catalog, IdentifiesEachEntryAsItself) {
  for (std::int64_t p : {3, 5})
    for (const auto& b : tabulated_entries(p)) {
      auto id = identify(b.table, p);
      ASSERT_TRUE(id.has_value()) << b.label;
      EXPECT_EQ(*id, b.label);
    }
}

TEST(Catalog, IdentifiesAnAutomorphismGroup) {
  auto t = ElementTable::of(build(parse_spec("fam16p(C16,3,C2,a)")));
  auto r = automorphism_group(t);
  auto id = identify(r, 3);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, "Hol(Cp)×C4×C2");
}

TEST(Catalog, UnknownGroupIsNotIdentified) {
  auto t = ElementTable::of(build(parse_spec("cyclic(7)")));
  EXPECT_FALSE(identify(t, 3).has_value());
}
