#include <gtest/gtest.h>

#include <set>

#include "fgt/aut.hpp"
#include "fgt/catalog.hpp"
#include "fgt/error.hpp"
#include "fgt/group_props.hpp"
#include "fgt/spec.hpp"
#include "fixtures.hpp"

using namespace fgt;

namespace {

std::vector<std::string> spec_corpus() {
  auto out = fixtures::small_specs();
  for (const auto& f : fixtures::all_presentation_fixtures()) {
    out.push_back(f.spec);
    out.push_back(f.pres);
  }
  for (const char* s :
       {"sd(elemab(3,2), order16(C8xC2), preset=ab_b)", "sd(elemab(3,2), quasidihedral(8), preset=QD8full)",
        "yprod(cyclic(4), dicyclic(2), a^2, a^2)", "wr(hol(cyclic(3)))",
        "sd(elemab(5,2), dicyclic(2), preset=Q2)", "fam16p2(Q4,7,Q4full)",
        "sd(elemab(7,2), dp(cyclic(3), quasidihedral(16)), preset=scalar_QD)", "aut(dihedral(4))"})
    out.emplace_back(s);
  for (std::int64_t p : {3, 5})
    for (const auto& e : catalog())
      if (auto s = e.instance(p)) out.push_back(print_spec(*s));
  return out;
}

}  // namespace

TEST(Spec, ParsePrintRoundTrip) {
  for (const auto& text : spec_corpus()) {
    GroupSpec s = parse_spec(text);
    std::string canonical = print_spec(s);
    EXPECT_EQ(parse_spec(canonical), s) << text;
    EXPECT_EQ(print_spec(parse_spec(canonical)), canonical) << text;
  }
}

TEST(Spec, ParseErrors) {
  EXPECT_THROW(parse_spec("cyclic(4"), ParseError);
  EXPECT_THROW(parse_spec("nosuch(3)"), ParseError);
  EXPECT_THROW(parse_spec("order16(C17)"), Error);
  EXPECT_THROW(build(parse_spec("fam16p(G44_22,3,C2,b)")), InvalidArgument);
}

TEST(Constructors, BuildOrderMatchesPrediction) {
  for (const auto& text : spec_corpus()) {
    GroupSpec s = parse_spec(text);
    EXPECT_EQ(build(s).order(), predicted_order(s)) << text;
  }
}

TEST(Constructors, IndexConventions) {
  EXPECT_EQ(build(parse_spec("dihedral(8)")).order(), 16u);
  EXPECT_EQ(build(parse_spec("dicyclic(4)")).order(), 16u);
  EXPECT_EQ(build(parse_spec("quasidihedral(8)")).order(), 16u);
  EXPECT_EQ(build(parse_spec("wr(cyclic(4))")).order(), 32u);
  EXPECT_EQ(build(parse_spec("hol(cyclic(7))")).order(), 42u);
  EXPECT_EQ(build(parse_spec("hol(elemab(3,2))")).order(), 432u);
}

TEST(Constructors, Order16GroupsArePairwiseNonIsomorphic) {
  const auto& names = order16_names();
  ASSERT_EQ(names.size(), 14u);
  std::vector<ElementTable> tables;
  for (const auto& n : names) tables.push_back(ElementTable::of(build(order16_spec(n))));
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      EXPECT_FALSE(is_isomorphic(tables[i], tables[j]).has_value()) << names[i] << " " << names[j];
}

TEST(Constructors, SemidirectActionRoundTrip) {
  // Generators are the p-part's, then the acting group's; conjugating each
  // basis element by an acting generator reproduces that matrix row.
  struct Case {
    std::string spec;
    std::int64_t p;
    std::vector<IntMatrix> action;
  };
  std::vector<Case> cases{
      {"sd(elemab(5,2), cyclic(4), action=[[0,1],[4,0]]@5)", 5, {{{0, 1}, {4, 0}}}},
      {"sd(elemab(7,2), dihedral(3), action=([[0,1],[6,6]],[[0,1],[1,0]])@7)", 7,
       {{{0, 1}, {6, 6}}, {{0, 1}, {1, 0}}}},
  };
  for (const auto& c : cases) {
    auto g = build(parse_spec(c.spec));
    const auto& gens = g.generators();
    for (std::size_t j = 0; j < c.action.size(); ++j) {
      const auto& t = gens[2 + j];
      for (std::size_t r = 0; r < 2; ++r) {
        Permutation expected = power(gens[0], c.action[j][r][0]) * power(gens[1], c.action[j][r][1]);
        EXPECT_EQ(conjugate(gens[r], t), expected) << c.spec << " gen " << j << " row " << r;
      }
    }
  }
}

TEST(Constructors, Family16pOrderAndNormalSylow) {
  for (std::int64_t p : {3, 5, 7})
    for (const auto& n : order16_names()) {
      auto pres = order16_presentation(n);
      for (const auto& letter : pres.alphabet) {
        Family16p fam;
        try {
          fam = family_16p(n, p, "C2", letter);
        } catch (const InvalidArgument&) {
          continue;  // the letter lies in the derived subgroup
        }
        ASSERT_EQ(fam.group.order(), static_cast<std::uint64_t>(16 * p)) << n << " " << letter;
        auto t = ElementTable::of(fam.group);
        std::vector<Elem> sylow;
        for (Elem x = 0; x < t.size(); ++x)
          if (t.order_of(x) == static_cast<std::uint32_t>(p) || x == 0) sylow.push_back(x);
        ASSERT_EQ(sylow.size(), static_cast<std::size_t>(p)) << n << " " << letter;
        EXPECT_TRUE(is_normal(t, sylow)) << n << " " << letter;
      }
    }
}

TEST(Constructors, PresetsSatisfyTheirPresentations) {
  for (const auto& n : {"C16", "D8", "Q4"}) {
    auto g = build(parse_spec(std::string("fam16p2(") + n + ",7," + n + "full)"));
    EXPECT_EQ(g.order(), 784u) << n;
  }
  EXPECT_EQ(build(parse_spec("sd(elemab(7,2), dp(cyclic(3), quasidihedral(16)), preset=scalar_QD)")).order(), 4704u);
}

TEST(Constructors, Table2aFactorsAreDefinedForEveryListedRow) {
  for (const char* label :
       {"C4xC2", "D4xC2", "1^3", "1^2wrC2", "Aut(2,1^2)", "Hol(1^3)", "Hol(2,1)", "S4xC2", "1^4", "Hol(C8)",
        "C4", "D4", "S4", "C2"})
    EXPECT_NO_THROW(predicted_order(table2a_factor(label))) << label;
}
