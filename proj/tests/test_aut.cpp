#include <gtest/gtest.h>

#include <random>

#include "aut_oracle.hpp"
#include "fgt/aut.hpp"
#include "fgt/group_props.hpp"
#include "fgt/spec.hpp"
#include "fixtures.hpp"

using namespace fgt;

namespace {

ElementTable table(const std::string& spec) { return ElementTable::of(build(parse_spec(spec))); }

// Groups beyond the oracle's reach, for the cheaper invariants.
std::vector<std::string> medium_specs() {
  return {"fam16p(C16,3,C2,a)", "fam16p(Q2xC2,3,C2,c)", "hol(cyclic(7))",
          "sd(elemab(3,2), quasidihedral(8), preset=QD8full)", "dp(dihedral(3),dihedral(3))",
          "sd(elemab(3,2), order16(C16), preset=C8)"};
}

}  // namespace

TEST(AutOracle, MatchesExhaustiveCountOnSmallGroups) {
  for (const auto& spec : fixtures::small_specs()) {
    auto t = table(spec);
    ASSERT_LE(t.size(), 24u) << spec;
    EXPECT_EQ(automorphism_group(t).order, oracle::count_automorphisms(t)) << spec;
  }
}

TEST(AutOracle, KnownSmallValues) {
  EXPECT_EQ(automorphism_group(table("dihedral(3)")).order, 6u);
  EXPECT_EQ(automorphism_group(table("dicyclic(2)")).order, 24u);
  EXPECT_EQ(automorphism_group(table("elemab(2,3)")).order, 168u);
  EXPECT_EQ(automorphism_group(table("cyclic(1)")).order, 1u);
}

TEST(Aut, OrderIndependentOfGeneratingSet) {
  auto specs = fixtures::small_specs();
  auto more = medium_specs();
  specs.insert(specs.end(), more.begin(), more.end());
  for (const auto& spec : specs) {
    auto t = table(spec);
    auto a = automorphism_group(t);
    auto b = automorphism_group(t, oracle::naive_generators(t));
    EXPECT_EQ(a.order, b.order) << spec;
  }
}

TEST(Aut, AutomorphismsPreserveTheTable) {
  for (const auto& spec : medium_specs()) {
    auto t = table(spec);
    auto r = automorphism_group(t);
    for (const auto& a : r.generators) {
      const auto& phi = a.element_permutation;
      EXPECT_EQ(phi[0], 0u) << spec;
      const bool full = t.size() <= 200;
      std::mt19937 rng(3);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(t.size() - 1));
      for (std::size_t k = 0; k < (full ? t.size() * t.size() : 20000); ++k) {
        Elem x = full ? static_cast<Elem>(k / t.size()) : pick(rng);
        Elem y = full ? static_cast<Elem>(k % t.size()) : pick(rng);
        ASSERT_EQ(phi[t.mul(x, y)], t.mul(phi[x], phi[y])) << spec;
      }
      for (std::size_t j = 0; j < r.search_gens.size(); ++j)
        EXPECT_EQ(phi[r.search_gens[j]], a.generator_images[j]) << spec;
    }
  }
}

TEST(Aut, InnerAutomorphismsAreNormalWithExpectedOrder) {
  for (const auto& spec : medium_specs()) {
    auto t = table(spec);
    auto r = automorphism_group(t);
    auto inn = inner_automorphisms(t);
    EXPECT_EQ(inn.order() * center(t).size(), t.size()) << spec;
    EXPECT_EQ(r.inner_order, inn.order()) << spec;
    EXPECT_EQ(r.center_order, center(t).size()) << spec;
    for (const auto& a : r.generators)
      for (const auto& g : inn.generators()) {
        auto c = conjugate(g, a.element_permutation);
        EXPECT_TRUE(inn.contains(c)) << spec;
      }
  }
}

TEST(Aut, CompletenessCriterion) {
  for (const auto& spec : medium_specs()) {
    auto t = table(spec);
    auto r = automorphism_group(t);
    EXPECT_EQ(r.complete, r.center_order == 1 && r.order == r.inner_order) << spec;
    EXPECT_EQ(is_complete(t), r.complete) << spec;
  }
  EXPECT_TRUE(is_complete(table("dihedral(3)")));
  EXPECT_TRUE(is_complete(table("hol(elemab(2,2))")));
  EXPECT_TRUE(is_complete(table("hol(cyclic(7))")));
  EXPECT_FALSE(is_complete(table("dihedral(4)")));
}

TEST(Aut, IsomorphismIsReflexiveAndSymmetric) {
  std::vector<std::string> specs = {"dihedral(4)", "wr(cyclic(2))", "dicyclic(2)", "order16(QD8)",
                                    "quasidihedral(8)", "order16(D4xC2)", "order16(Q2xC2)"};
  for (const auto& s : specs) {
    auto t = table(s);
    auto cert = is_isomorphic(t, t);
    ASSERT_TRUE(cert.has_value()) << s;
  }
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = 0; j < specs.size(); ++j) {
      auto a = table(specs[i]), b = table(specs[j]);
      EXPECT_EQ(is_isomorphic(a, b).has_value(), is_isomorphic(b, a).has_value()) << specs[i] << " " << specs[j];
      if (!(fingerprint(a) == fingerprint(b))) EXPECT_FALSE(is_isomorphic(a, b).has_value());
    }
  EXPECT_TRUE(is_isomorphic(table("dihedral(4)"), table("wr(cyclic(2))")).has_value());
  EXPECT_TRUE(is_isomorphic(table("quasidihedral(8)"), table("order16(QD8)")).has_value());
  EXPECT_FALSE(is_isomorphic(table("dihedral(4)"), table("dicyclic(2)")).has_value());
  EXPECT_FALSE(is_isomorphic(table("order16(D4xC2)"), table("order16(Q2xC2)")).has_value());
}

TEST(Aut, CertificateIsAnIsomorphism) {
  auto a = table("dihedral(4)"), b = table("wr(cyclic(2))");
  auto cert = is_isomorphic(a, b);
  ASSERT_TRUE(cert.has_value());
  // Images satisfy the relators of a presentation of D4 on the source generators.
  ASSERT_EQ(cert->source_gens.size(), cert->images.size());
  auto span_a = oracle::span(a, cert->source_gens);
  EXPECT_EQ(std::count(span_a.begin(), span_a.end(), true), 8);
  auto span_b = oracle::span(b, cert->images);
  EXPECT_EQ(std::count(span_b.begin(), span_b.end(), true), 8);
}

TEST(Aut, FindEpimorphism) {
  auto pres = parse_presentation("a,b; a^3=b^2=(a*b)^2=1");
  auto imgs = find_epimorphism(pres, table("dihedral(3)"));
  ASSERT_TRUE(imgs.has_value());
  EXPECT_TRUE(check_relators(pres, table("dihedral(3)"), *imgs));
  EXPECT_FALSE(find_epimorphism(pres, table("cyclic(6)")).has_value());
}

TEST(Aut, ReducedRepresentationIsFaithful) {
  for (const auto& spec : medium_specs()) {
    auto r = automorphism_group(table(spec));
    EXPECT_EQ(r.reduced.order(), r.order) << spec;
  }
}

TEST(Aut, TowerOfCompleteGroupStops) {
  auto tower = aut_tower(build(parse_spec("dihedral(3)")), 5, 100000);
  ASSERT_EQ(tower.steps.size(), 1u);
  EXPECT_TRUE(tower.terminated);
  EXPECT_TRUE(tower.steps[0].complete);
  auto d4 = aut_tower(build(parse_spec("dihedral(4)")), 5, 100000);
  ASSERT_GE(d4.steps.size(), 2u);
  EXPECT_EQ(d4.steps[1].fingerprint.order, 8u);
}

TEST(Fingerprint, Basics) {
  auto f = fingerprint(table("cyclic(2)"));
  EXPECT_EQ(f.order, 2u);
  EXPECT_EQ(f.ncl, 2u);
  EXPECT_EQ(f.center_order, 2u);
  auto s3 = fingerprint(table("dihedral(3)"));
  EXPECT_EQ(s3.label(), "[6](3,1)");
  EXPECT_EQ(s3.order_histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(s3.derived_orders, (std::vector<std::uint64_t>{6, 3, 1}));
}
