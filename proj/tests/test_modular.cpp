#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fgt/error.hpp"
#include "fgt/matrix.hpp"
#include "fgt/modular.hpp"
#include "fgt/presentation.hpp"

using namespace fgt;

namespace {

std::vector<std::int64_t> odd_primes(std::int64_t limit) {
  std::vector<bool> comp(static_cast<std::size_t>(limit + 1), false);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (comp[static_cast<std::size_t>(i)]) continue;
    if (i > 2) out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) comp[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

bool sorted_unique(const SolutionSet& s) {
  return std::is_sorted(s.solutions.begin(), s.solutions.end()) &&
         std::adjacent_find(s.solutions.begin(), s.solutions.end()) == s.solutions.end();
}

}  // namespace

TEST(Modular, Basics) {
  EXPECT_EQ(mod(-1, 7), 6);
  EXPECT_EQ(mod(15, 7), 1);
  EXPECT_EQ(pow_mod(3, 6, 7), 1);
  EXPECT_EQ(pow_mod(2, 10, 1000), 24);
  for (std::int64_t a = 1; a < 31; ++a) EXPECT_EQ(mod(a * inv_mod(a, 31), 31), 1);
  EXPECT_EQ(two_adic(48), 4u);
  EXPECT_EQ(unit_order(2, 7), 3u);
  EXPECT_EQ(unit_order(3, 7), 6u);
}

TEST(Modular, IsPrimeMatchesSieve) {
  auto primes = odd_primes(500);
  for (std::uint64_t n = 3; n <= 500; n += 2)
    EXPECT_EQ(is_prime(n), std::binary_search(primes.begin(), primes.end(), static_cast<std::int64_t>(n)))
        << n;
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
}

TEST(Modular, RootsOfUnityCountAndVerify) {
  for (auto p : odd_primes(120))
    for (std::uint64_t t : {2u, 3u, 4u, 8u, 16u, 32u}) {
      auto s = roots_of_unity(p, t);
      EXPECT_EQ(s.solutions.size(), std::gcd<std::uint64_t>(t, static_cast<std::uint64_t>(p - 1)))
          << p << " " << t;
      EXPECT_TRUE(sorted_unique(s));
      for (auto x : s.values()) EXPECT_EQ(pow_mod(x, t, p), 1);
    }
}

TEST(Modular, ActionParamsVerifyAndAreSymmetric) {
  for (auto p : odd_primes(200)) {
    for (auto kind : {ActionKind::D8, ActionKind::QD8}) {
      auto s = action_params(p, kind);
      EXPECT_TRUE(sorted_unique(s));
      std::int64_t rhs = kind == ActionKind::D8 ? 1 : p - 1;
      for (auto x : s.values()) {
        EXPECT_EQ(mod(2 * x * x, p), rhs) << p;
        EXPECT_TRUE(s.contains({p - x})) << p << " " << x;
      }
      // Exhaustive oracle for the count.
      std::size_t n = 0;
      for (std::int64_t x = 0; x < p; ++x) n += mod(2 * x * x, p) == rhs;
      EXPECT_EQ(s.solutions.size(), n);
    }
    auto q = action_params(p, ActionKind::Q4Pair);
    for (const auto& t : q.solutions) EXPECT_EQ(mod(t[0] * t[0] + t[1] * t[1], p), p - 1);
  }
}

TEST(Modular, C16ActionParamsGiveOrder16) {
  for (std::int64_t p : {7, 23, 31, 47, 71, 79, 41, 73, 89}) {
    auto s = c16_action_params(p);
    EXPECT_FALSE(s.solutions.empty()) << p;
    for (const auto& t : s.solutions) {
      MatGF m(p, {{0, 1}, {t[0], t[1]}});
      EXPECT_EQ(matrix_order(m), 16u) << p;
    }
    for (const auto& t : s.rejected) {
      MatGF m(p, {{0, 1}, {t[0], t[1]}});
      EXPECT_NE(matrix_order(m), 16u) << p;
    }
  }
}

TEST(Modular, C16ActionParamsKnownTriples) {
  EXPECT_TRUE(c16_action_params(7).contains({1, 3}));
  EXPECT_TRUE(c16_action_params(23).contains({1, 4}));
  EXPECT_TRUE(c16_action_params(31).contains({-1, 5}));
  EXPECT_TRUE(c16_action_params(47).contains({-1, 3}));
  // At p = 31 the x = 1 branch contributes nothing.
  for (const auto& t : c16_action_params(31).solutions) EXPECT_EQ(t[0], -1);
}

TEST(Modular, IteratedRadicalRootsSatisfyRecurrence) {
  for (std::int64_t p : {47, 79, 31, 127}) {
    unsigned n = two_adic(static_cast<std::uint64_t>(p + 1));
    for (unsigned k = 3; k <= n; ++k) {
      auto s = iterated_radical_roots(p, k);
      for (auto x : s.values()) {
        std::int64_t f = mod((x * x + 2) % p * ((x * x + 2) % p), p);
        for (unsigned j = 3; j < k; ++j) f = mod((f - 2) * (f - 2), p);
        EXPECT_EQ(f, 2) << p << " " << k << " " << x;
        EXPECT_TRUE(s.contains({mod(p - x, p)}));
      }
    }
  }
  EXPECT_THROW(iterated_radical_roots(13, 3), InvalidArgument);
}

TEST(Modular, NegatedPrimitiveRoots) {
  for (auto p : odd_primes(60)) {
    auto s = negated_primitive_roots(p);
    std::size_t phi = 0;
    for (std::int64_t g = 1; g < p; ++g) phi += unit_order(g, p) == static_cast<std::uint64_t>(p - 1);
    EXPECT_EQ(s.solutions.size(), phi);
    for (auto x : s.values()) EXPECT_EQ(unit_order(mod(-x, p), p), static_cast<std::uint64_t>(p - 1));
    EXPECT_EQ(unit_roots(p).solutions.size(), static_cast<std::size_t>(p - 1));
  }
}

TEST(Coxeter, OffdiagSolutionsSatisfyRelatorsEndToEnd) {
  auto pres = parse_presentation("a,b; a^3=b^4=(a,b^2)=a*b*(a*b^-1)^3=1");
  for (std::int64_t p : {7, 23, 31, 47}) {
    auto s = coxeter234_search(p, CoxeterForm::OffdiagPair);
    EXPECT_FALSE(s.solutions.empty());
    MatrixGroup g{p, 2, {}};
    for (const auto& t : s.solutions) {
      EXPECT_EQ(mod(t[0] * t[1], p), p - 2);
      MatGF a(p, {{-1, 1}, {-1, 0}}), b(p, {{1, t[0]}, {t[1], -1}});
      EXPECT_TRUE(check_relators(pres, std::vector<MatGF>{a, b}));
      g.generators = {a, b};
      EXPECT_EQ(matrix_group_to_perm(g).order(), 48u);
    }
  }
}

TEST(Coxeter, RejectsUnsupportedPrimes) {
  EXPECT_THROW(coxeter234_search(5, CoxeterForm::OffdiagPair), InvalidArgument);
  EXPECT_THROW(coxeter234_search(15, CoxeterForm::OffdiagPair), InvalidArgument);
}
