#include <set>

#include "fgt/error.hpp"
#include "fgt/modular.hpp"
#include "fgt/presentation.hpp"

namespace fgt {

namespace {

const char* kBinaryOctahedral = "a,b; a^3=b^4=(a,b^2)=a*b*(a*b^-1)^3=1";
const char* kTimesCqSeven =
    "a,b; a^3=(a,b^2)=(a*b)^4*b^2=(a*b^-1)^4*b^-2=(a*b)^2*a^-1*b^-1*(a*b^-1)^2*a^-1*b=1";
const char* kTimesCq =
    "a,b; a^3=(a,b^2)=(a*b^-1)^4*b^-x=(a*b)^2*a^-1*b^-1*(a*b^-1)^2*a^-1*b=1";

std::size_t matrix_group_size(const std::vector<MatGF>& gens, std::size_t cap) {
  std::set<MatGF> seen{MatGF::identity(gens[0].p(), gens[0].n())};
  std::vector<MatGF> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      MatGF y = queue[i] * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) return 0;
        queue.push_back(y);
      }
    }
  return seen.size();
}

}  // namespace

SolutionSet coxeter234_search(std::int64_t p, CoxeterForm form) {
  if (p < 7 || !is_prime(static_cast<std::uint64_t>(p)) || p % 8 != 7)
    throw InvalidArgument("coxeter234_search needs a prime p = 7 mod 8");
  SolutionSet out;
  out.p = p;
  const MatGF a(p, {{-1, 1}, {-1, 0}});
  if (form == CoxeterForm::OffdiagPair || form == CoxeterForm::GeneralQuadruple) {
    Presentation pres = parse_presentation(kBinaryOctahedral);
    const std::size_t index = todd_coxeter(pres).index;
    out.constraint = form == CoxeterForm::OffdiagPair
                         ? "b=[[1,x],[y,-1]], x*y=-2, <a,b> satisfies a^3=b^4=(a,b^2)=a*b*(a*b^-1)^3=1"
                         : "b=[[v,x],[y,w]] of order 4, <a,b> satisfies a^3=b^4=(a,b^2)=a*b*(a*b^-1)^3=1";
    for (std::int64_t v = 0; v < p; ++v) {
      if (form == CoxeterForm::OffdiagPair && v != 1) continue;
      // (a,b^2)=1 forces b^2 scalar; order 4 then means b^2=-I, so w=-v and
      // det b = 1.
      for (std::int64_t x = 1; x < p; ++x) {
        std::int64_t y = mod(-(1 + v * v) % p * inv_mod(x, p), p);
        MatGF b(p, {{v, x}, {y, -v}});
        if (matrix_order(b) != 4 || !check_relators(pres, {a, b})) continue;
        if (form == CoxeterForm::OffdiagPair)
          out.solutions.push_back({x, y});
        else
          out.solutions.push_back({v, x, y, mod(-v, p)});
      }
    }
    if (form == CoxeterForm::OffdiagPair) {
      for (const auto& s : out.solutions) {
        MatGF b(p, {{1, s[0]}, {s[1], -1}});
        if (matrix_group_size({a, b}, 4 * index) != index)
          out.notes.push_back("(" + std::to_string(s[0]) + "," + std::to_string(s[1]) +
                              ") generates a group of order other than " + std::to_string(index));
      }
    }
  } else {
    Presentation pres = parse_presentation(p == 7 ? kTimesCqSeven : kTimesCq, {{"x", p - 5}});
    const std::uint64_t want = static_cast<std::uint64_t>(2 * (p - 1));
    out.constraint = "b=[[1,x],[y,-1]] of order 2(p-1), <a,b> satisfies the <2,3,4> x Cq relators";
    for (std::int64_t x = 1; x < p; ++x)
      for (std::int64_t y = 1; y < p; ++y) {
        // b^2 = (1+xy)I, so the order condition is a unit condition.
        std::int64_t s = mod(1 + x * y, p);
        if (s == 0 || unit_order(s, p) != static_cast<std::uint64_t>(p - 1)) continue;
        MatGF b(p, {{1, x}, {y, -1}});
        if (matrix_order(b) != want || !check_relators(pres, {a, b})) continue;
        out.solutions.push_back({x, y});
      }
  }
  return out;
}

}  // namespace fgt
