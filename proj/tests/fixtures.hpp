#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgt/modular.hpp"
#include "fgt/presentation.hpp"
#include "fgt/spec.hpp"

namespace fgt::fixtures {

// Presentation text paired with a structural spec of the same group.
struct PresFixture {
  std::string name;
  std::string pres;
  std::string spec;
};

inline std::string num(std::int64_t v) { return std::to_string(v); }

inline std::vector<PresFixture> order16_fixtures() {
  std::vector<PresFixture> out;
  for (const auto& n : order16_names())
    out.push_back({"order16-" + n, print_presentation(order16_presentation(n)), "order16(" + n + ")"});
  return out;
}

// Presentations for groups built from Cp at a given odd prime.
inline std::vector<PresFixture> prime_fixtures(std::int64_t p) {
  const std::string P = num(p);
  std::vector<PresFixture> out;
  out.push_back({"holomorph-" + P,
                 "pres{a,b; a^p=b^(p-1)=a^b*a^x=1; p=" + P + ", x=" + num(p - primitive_root(p)) + "}",
                 "hol(cyclic(" + P + "))"});
  out.push_back({"cp-by-c16-" + P, "pres{x,a; x^p=a^16=x^a*x=1; p=" + P + "}",
                 "fam16p(C16," + P + ",C2,a)"});
  std::int64_t z = primitive_root(p);
  out.push_back({"scalar-cq-" + P,
                 "pres{a,b,c; a^p=b^p=(a,b)=c^q=a^c*a^{-z}=b^c*b^{-z}=1; p=" + P + ", q=" + num(p - 1) +
                     ", z=" + num(z) + "}",
                 "sd(elemab(" + P + ",2), cyclic(" + num(p - 1) + "), action=[[" + num(z) + ",0],[0," +
                     num(z) + "]]@" + P + ")"});
  // Aut of (Cp x Cp) @ C16 with the C8 action, general form for p != 1 mod 8.
  const std::int64_t hol_x = p == 3 ? 1 : p == 5 ? 3 : 2;
  out.push_back({"aut-c8-action-" + P,
                 "pres{a,b,c,d; a^p=b^p=c^t=a^c*b=b^c*a^x*b^{x^2}=d^4=(a,d)=b^d*(c*a^x*c^{-1})^{-1}=c^d*c^{-p}=1; p=" +
                     P + ", x=" + num(hol_x) + ", t=p^2-1}",
                 "aut(sd(elemab(" + P + ",2), order16(C16), preset=C8))"});
  if (p == 3)
    out.push_back({"aut-c8-action-3-special",
                   "pres{a,b,c,d; a^3=b^3=(a,b)=c^8=a^c*b=b^c*a*b=d^4=a^d*a*b^{-1}=b^d*b^{-1}*a^{-1}=c^d*a*c^{-3}=1}",
                   "aut(sd(elemab(3,2), order16(C16), preset=C8))"});
  if (p % 8 == 7) {
    auto d8 = action_params(p, ActionKind::D8);
    out.push_back({"d8-pair-" + P,
                   "pres{a,b,c,d; a^p=b^p=(a,b)=c^8=d^2=c^d*c=a^c*a^{-x}*b^{-x}=b^c*a^x*b^{-x}=(a,d)=b^d*b=1; p=" +
                       P + ", x=" + num(d8.values().front()) + "}",
                   "fam16p2(D8," + P + ",D8full)"});
    auto c16 = c16_action_params(p);
    const auto& s = c16.solutions.front();
    out.push_back({"c16-pair-" + P,
                   "pres{a,b,c; a^p=b^p=(a,b)=c^16=a^c*b^{-1}=b^c*a^{-x}*b^{-y}=1; p=" + P + ", x=" +
                       num(mod(s[0], p)) + ", y=" + num(s[1]) + "}",
                   "fam16p2(C16," + P + ",C16full)"});
  }
  return out;
}

inline std::vector<PresFixture> all_presentation_fixtures() {
  auto out = order16_fixtures();
  for (std::int64_t p : {3, 5, 7}) {
    auto more = prime_fixtures(p);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

// Small groups used for oracle comparisons; every entry has order <= 24.
inline std::vector<std::string> small_specs() {
  std::vector<std::string> out;
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 24}) out.push_back("cyclic(" + num(n) + ")");
  for (int n = 2; n <= 12; ++n) out.push_back("dihedral(" + num(n) + ")");
  for (int n = 2; n <= 6; ++n) out.push_back("dicyclic(" + num(n) + ")");
  out.push_back("quasidihedral(8)");
  out.push_back("elemab(2,2)");
  out.push_back("elemab(2,3)");
  out.push_back("elemab(3,2)");
  out.push_back("hol(cyclic(5))");
  out.push_back("hol(elemab(2,2))");
  out.push_back("wr(cyclic(2))");
  out.push_back("wr(cyclic(3))");
  out.push_back("dp(cyclic(2),dihedral(3))");
  out.push_back("dp(cyclic(3),dicyclic(2))");
  out.push_back("dp(cyclic(2),cyclic(2),cyclic(6))");
  for (const auto& n : order16_names()) out.push_back("order16(" + n + ")");
  return out;
}

}  // namespace fgt::fixtures
