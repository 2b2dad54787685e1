#include "fgt/modular.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "fgt/error.hpp"

namespace fgt {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  __int128 r = 1, b = mod(a, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t g = p, x = 0, x1 = 1, a1 = mod(a, p);
  if (a1 == 0) throw InvalidArgument("zero has no inverse mod " + std::to_string(p));
  while (a1) {
    std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw InvalidArgument("not invertible");
  return mod(x, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t unit_order(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) throw InvalidArgument("zero is not a unit");
  std::uint64_t k = 1;
  for (std::int64_t x = a; x != 1; x = x * a % p) ++k;
  return k;
}

unsigned two_adic(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("two_adic(0)");
  unsigned k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return k;
}

std::vector<Residue> SolutionSet::values() const {
  std::vector<Residue> out;
  for (const auto& s : solutions) out.push_back(s.front());
  return out;
}

bool SolutionSet::contains(const std::vector<Residue>& tuple) const {
  return std::find(solutions.begin(), solutions.end(), tuple) != solutions.end();
}

namespace {

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

}  // namespace

SolutionSet roots_of_unity(std::int64_t p, std::uint64_t t) {
  require_odd_prime(p);
  if (t == 0) throw InvalidArgument("t must be positive");
  SolutionSet s{p, "x^" + std::to_string(t) + " = 1", {}, {}, {}};
  for (std::int64_t x = 1; x < p; ++x)
    if (pow_mod(x, t, p) == 1) s.solutions.push_back({x});
  return s;
}

SolutionSet action_params(std::int64_t p, ActionKind kind) {
  require_odd_prime(p);
  SolutionSet s;
  s.p = p;
  switch (kind) {
    case ActionKind::D8:
    case ActionKind::QD8: {
      std::int64_t rhs = kind == ActionKind::D8 ? 1 : p - 1;
      s.constraint = kind == ActionKind::D8 ? "2x^2 = 1" : "2x^2 = -1";
      for (std::int64_t x = 1; x < p; ++x)
        if (2 * x * x % p == rhs) s.solutions.push_back({x});
      break;
    }
    case ActionKind::Q4Pair:
      s.constraint = "a^2 + b^2 = -1";
      for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
          if ((a * a + b * b + 1) % p == 0) s.solutions.push_back({a, b});
      break;
  }
  if (s.solutions.empty()) s.notes.push_back("no solution for p = " + std::to_string(p));
  return s;
}

namespace {

// Order of [[0,1],[x,y]] over GF(p) by repeated multiplication.
std::uint64_t companion_order(std::int64_t x, std::int64_t y, std::int64_t p) {
  std::int64_t m00 = 0, m01 = 1, m10 = mod(x, p), m11 = mod(y, p);
  if (m10 == 0) throw InvalidArgument("singular matrix");
  std::int64_t a = m00, b = m01, c = m10, d = m11;
  std::uint64_t k = 1;
  while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
    std::int64_t na = (a * m00 + b * m10) % p, nb = (a * m01 + b * m11) % p;
    std::int64_t nc = (c * m00 + d * m10) % p, nd = (c * m01 + d * m11) % p;
    a = na, b = nb, c = nc, d = nd;
    ++k;
  }
  return k;
}

}  // namespace

SolutionSet c16_action_params(std::int64_t p) {
  require_odd_prime(p);
  SolutionSet s;
  s.p = p;
  if (p % 8 == 7) {
    s.constraint = "x=1: (y^2+2)^2 = 2 or x=-1: (y^2-2)^2 = 2; order([[0,1],[x,y]]) = 16";
    for (int sign : {-1, 1}) {
      for (std::int64_t y = 0; y < p; ++y) {
        std::int64_t u = mod(y * y + 2 * sign, p);
        if ((u * u - 2) % p != 0) continue;
        if (companion_order(sign, y, p) == 16)
          s.solutions.push_back({sign, y});
        else
          s.rejected.push_back({sign, y});
      }
    }
    // Independent check of the x = 1 branch: any y at all giving order 16?
    bool any_plus = false;
    for (std::int64_t y = 0; y < p; ++y)
      if (companion_order(1, y, p) == 16) any_plus = true;
    if (!any_plus)
      s.notes.push_back("no y gives an order-16 matrix with x = 1");
  } else if (p % 16 == 9) {
    s.constraint = "y = 0, x of order 8";
    for (std::int64_t x = 1; x < p; ++x)
      if (pow_mod(x, 8, p) == 1) {
        if (unit_order(x, p) == 8)
          s.solutions.push_back({x, 0});
        else
          s.rejected.push_back({x, 0});
      }
  } else {
    throw InvalidArgument("c16 action needs p = 7 mod 8 or p = 9 mod 16");
  }
  std::sort(s.solutions.begin(), s.solutions.end());
  return s;
}

SolutionSet iterated_radical_roots(std::int64_t p, unsigned n) {
  require_odd_prime(p);
  if (n < 3) throw InvalidArgument("nesting depth needs n >= 3");
  if (n >= 63 || (p + 1) % (std::int64_t{1} << n) != 0)
    throw InvalidArgument("p must be -1 mod 2^" + std::to_string(n));
  SolutionSet s;
  s.p = p;
  s.constraint = "nested radical depth " + std::to_string(n);
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t f = mod(x * x + 2, p);
    f = f * f % p;
    for (unsigned k = 3; k < n; ++k) {
      f = mod(f - 2, p);
      f = f * f % p;
    }
    if (f == 2) s.solutions.push_back({x});
  }
  return s;
}

std::int64_t primitive_root(std::int64_t p) {
  require_odd_prime(p);
  for (std::int64_t g = 2; g < p; ++g)
    if (unit_order(g, p) == static_cast<std::uint64_t>(p - 1)) return g;
  throw Error("no primitive root found");
}

SolutionSet negated_primitive_roots(std::int64_t p) {
  require_odd_prime(p);
  SolutionSet s{p, "-x is a primitive root", {}, {}, {}};
  for (std::int64_t x = 1; x < p; ++x)
    if (unit_order(p - x, p) == static_cast<std::uint64_t>(p - 1)) s.solutions.push_back({x});
  return s;
}

SolutionSet unit_roots(std::int64_t p) { return roots_of_unity(p, static_cast<std::uint64_t>(p - 1)); }

}  // namespace fgt
