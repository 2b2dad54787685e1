#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fgt/error.hpp"
#include "fgt/group_props.hpp"
#include "fgt/perm_group.hpp"

using namespace fgt;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) {
  return Permutation::from_cycles(n, c);
}

std::vector<Permutation> s3() { return {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}; }

// Naive closure oracle using std::set.
std::set<Permutation> naive_closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(gens[0].degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      auto x = queue[i] * g;
      if (seen.insert(x).second) queue.push_back(x);
    }
  return seen;
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST(Compose, LeftToRight) {
  auto c = cyc(3, {{0, 1, 2}});
  EXPECT_EQ(c * c, cyc(3, {{0, 2, 1}}));
  EXPECT_EQ(Permutation(3) * c, c);
  auto a = cyc(3, {{0, 1}});
  // (a*c)(0) = c(a(0)) = c(1) = 2
  EXPECT_EQ((a * c)[0], 2u);
}

TEST(Compose, DegreeMismatchThrows) {
  EXPECT_THROW(Permutation(3) * Permutation(4), InvalidArgument);
}

TEST(Compose, InverseAndAssociativity) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto x = random_perm(10, rng), y = random_perm(10, rng), z = random_perm(10, rng);
    EXPECT_TRUE((x * x.inverse()).is_identity());
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation(0), InvalidArgument);
}

TEST(Permutation, ParseAndPrint) {
  auto p = Permutation::parse("(2,9,4,6,3,7,5,8)", 9, true);
  EXPECT_EQ(p.order(), 8u);
  EXPECT_EQ(p.to_cycles(true), "(2,9,4,6,3,7,5,8)");
  EXPECT_THROW(Permutation::parse("(1,2", 3, true), ParseError);
}

TEST(Closure, S3HasSixElements) {
  auto t = ElementTable::closure(s3());
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(t.size(), naive_closure(s3()).size());
  EXPECT_TRUE(t.element(0).is_identity());
}

TEST(Closure, SixteenCycle) {
  std::vector<Point> c(16);
  std::iota(c.begin(), c.end(), 0);
  auto t = ElementTable::closure({cyc(16, {c})});
  EXPECT_EQ(t.size(), 16u);
}

TEST(Closure, CapExceeded) {
  std::vector<Permutation> s7 = {cyc(7, {{0, 1}}), cyc(7, {{0, 1, 2, 3, 4, 5, 6}})};
  EXPECT_THROW(ElementTable::closure(s7, 100), CapExceeded);
}

TEST(Closure, TableOperationsAgreeWithPermutations) {
  std::vector<Permutation> gens = {cyc(6, {{0, 1, 2}, {3, 4}}), cyc(6, {{0, 3}, {1, 5}})};
  auto t = ElementTable::closure(gens);
  for (Elem a = 0; a < t.size(); ++a) {
    EXPECT_EQ(t.element(t.inv(a)), t.element(a).inverse());
    EXPECT_EQ(t.order_of(a), t.element(a).order());
    for (Elem b = 0; b < t.size(); b += 3)
      EXPECT_EQ(t.element(t.mul(a, b)), t.element(a) * t.element(b));
  }
}

TEST(StabChain, TrivialGroup) {
  PermutationGroup g(5, {});
  EXPECT_EQ(g.order(), 1u);
  PermutationGroup h(5, {Permutation(5)});
  EXPECT_EQ(h.order(), 1u);
}

TEST(StabChain, OrderMatchesClosureOnRandomGroups) {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 4 + rng() % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      auto p = random_perm(n, rng);
      // keep groups small by powering down sometimes
      gens.push_back(rng() % 2 ? p : power(p, 2));
    }
    PermutationGroup g(n, gens);
    auto oracle = naive_closure(gens);
    ASSERT_EQ(g.order(), oracle.size());
    for (int k = 0; k < 20; ++k) {
      auto x = random_perm(n, rng);
      EXPECT_EQ(g.contains(x), oracle.count(x) == 1);
    }
  }
}

TEST(StabChain, PrescribedBase) {
  // S3 on 3 points with base [0,1]
  StabChain ch(3, {0, 1}, {{cyc(3, {{0, 1, 2}}), cyc(3, {{1, 2}})}, {cyc(3, {{1, 2}})}});
  EXPECT_EQ(ch.order(), 6u);
}

TEST(Classes, AbelianAllSingletons) {
  auto t = ElementTable::closure({cyc(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(conjugacy_classes(t).size(), 4u);
  EXPECT_EQ(center(t).size(), 4u);
  EXPECT_EQ(derived_subgroup(t).size(), 1u);
}

TEST(Classes, S3Oracle) {
  auto t = ElementTable::closure(s3());
  auto cls = conjugacy_classes(t);
  std::multiset<std::size_t> sizes;
  for (auto& c : cls) sizes.insert(c.members.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 3}));
  // exhaustive conjugation oracle
  for (auto& c : cls)
    for (Elem g = 0; g < t.size(); ++g) {
      Elem y = t.conj(c.rep, g);
      EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(), y));
    }
  EXPECT_EQ(center(t), std::vector<Elem>{0});
  EXPECT_EQ(derived_subgroup(t).size(), 3u);
}

TEST(Classes, QuaternionDerived) {
  // Q8 on 8 points (regular)
  auto i = cyc(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  auto j = cyc(8, {{0, 4, 2, 6}, {1, 7, 3, 5}});
  auto t = ElementTable::closure({i, j});
  ASSERT_EQ(t.size(), 8u);
  EXPECT_EQ(derived_subgroup(t).size(), 2u);
  EXPECT_EQ(center(t).size(), 2u);
}

TEST(Quotient, CyclicByOrderTwo) {
  std::vector<Point> c(8);
  std::iota(c.begin(), c.end(), 0);
  auto t = ElementTable::closure({cyc(8, {c})});
  Elem g = t.generators()[0];
  auto q = quotient_by_normal(t, subgroup_closure(t, {t.pow(g, 4)}));
  EXPECT_EQ(q.order(), 4u);
  EXPECT_EQ(quotient_by_normal(t, subgroup_closure(t, {g})).order(), 1u);
}

TEST(Quotient, RejectsNonNormal) {
  auto t = ElementTable::closure(s3());
  auto sub = subgroup_closure(t, {t.generators()[0]});
  EXPECT_THROW(quotient_by_normal(t, sub), InvalidArgument);
}

TEST(Fingerprint, SmallGroups) {
  auto c2 = ElementTable::closure({cyc(2, {{0, 1}})});
  auto f = fingerprint(c2);
  EXPECT_EQ(f.order, 2u);
  EXPECT_EQ(f.ncl, 2u);
  EXPECT_EQ(f.center_order, 2u);
  EXPECT_EQ(f.order_histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}}));
  EXPECT_EQ(f.derived_orders, (std::vector<std::uint64_t>{2, 1}));
  auto fs = fingerprint(ElementTable::closure(s3()));
  EXPECT_EQ(fs.ncl, 3u);
  EXPECT_EQ(fs.center_order, 1u);
  EXPECT_EQ(fs.order_histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(fs.derived_orders, (std::vector<std::uint64_t>{6, 3, 1}));
  EXPECT_EQ(fs.label(), "[6](3,1)");
}
