#include "fgt/catalog.hpp"

#include "fgt/error.hpp"
#include "fgt/modular.hpp"

namespace fgt {

namespace {

GroupSpec hol_cp(std::int64_t p) { return hol_spec(cyclic_spec(p)); }

GroupSpec complete144() {
  return sd_preset_spec(elemab_spec(3, 2), order16_spec("QD8"), "QD8full");
}

std::string pretty(std::string label) {
  std::string out;
  for (char c : label) out += c == 'x' ? std::string("×") : std::string(1, c);
  return out;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto at3 = [](GroupSpec s) {
    return [s](std::int64_t p) -> std::optional<GroupSpec> {
      if (p != 3) return std::nullopt;
      return s;
    };
  };
  GroupSpec d4;
  d4.kind = SpecKind::Dihedral;
  d4.n = 4;
  c.push_back({"[144]", at3(complete144())});
  c.push_back({"C2×[144]", at3(dp_spec({cyclic_spec(2), complete144()}))});
  c.push_back({"C4×[144]", at3(dp_spec({cyclic_spec(4), complete144()}))});
  c.push_back({"D4×[144]", at3(dp_spec({d4, complete144()}))});
  c.push_back({"S4×[144]", at3(dp_spec({hol_spec(elemab_spec(2, 2)), complete144()}))});
  c.push_back({"Hol(Cp×Cp)", [](std::int64_t p) -> std::optional<GroupSpec> {
                 return hol_spec(elemab_spec(p, 2));
               }});
  c.push_back({"(Cp×Cp)@(Cq×QD16)", [](std::int64_t p) -> std::optional<GroupSpec> {
                 if (p % 16 != 7) return std::nullopt;
                 std::int64_t q = p - 1;
                 while (q % 2 == 0) q /= 2;
                 GroupSpec qd;
                 qd.kind = SpecKind::Quasidihedral;
                 qd.n = 16;
                 return sd_preset_spec(elemab_spec(p, 2), dp_spec({cyclic_spec(q), qd}),
                                       "scalar_QD");
               }});
  c.push_back({"Hol(Cp)wrC2", [](std::int64_t p) -> std::optional<GroupSpec> {
                 return wr_spec(hol_cp(p));
               }});
  c.push_back({"C2×C2×C2×Hol(Cp)×Hol(Cp)", [](std::int64_t p) -> std::optional<GroupSpec> {
                 return dp_spec({elemab_spec(2, 3), hol_cp(p), hol_cp(p)});
               }});
  c.push_back({"Hol(Cp)×Hol(Cp)", [](std::int64_t p) -> std::optional<GroupSpec> {
                 return dp_spec({hol_cp(p), hol_cp(p)});
               }});
  for (std::string f : {"Hol(1^3)", "Aut(2,1^2)", "Hol(C8)", "Hol(2,1)", "S4xC2", "S4",
                        "1^2wrC2", "D4xC2", "1^4", "D4", "1^3", "C4xC2"}) {
    GroupSpec factor = table2a_factor(f);
    c.push_back({"Hol(Cp)×" + pretty(f), [factor](std::int64_t p) -> std::optional<GroupSpec> {
                   return dp_spec({hol_cp(p), factor});
                 }});
  }
  for (std::int64_t n : {16, 8, 4, 2}) {
    c.push_back({"Hol(Cp)×C" + std::to_string(n), [n](std::int64_t p) -> std::optional<GroupSpec> {
                   return dp_spec({hol_cp(p), cyclic_spec(n)});
                 }});
  }
  c.push_back({"Hol(Cp)", [](std::int64_t p) -> std::optional<GroupSpec> { return hol_cp(p); }});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

std::optional<std::string> identify(const ElementTable& t, std::int64_t p, std::size_t cap) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument("identify needs a prime");
  std::optional<Fingerprint> fp;
  for (const auto& entry : catalog()) {
    std::optional<GroupSpec> spec;
    try {
      spec = entry.instance(p);
    } catch (const InvalidArgument&) {
      continue;
    }
    if (!spec || predicted_order(*spec) != t.size() || t.size() > cap) continue;
    ElementTable e = ElementTable::of(build(*spec), cap);
    if (!fp) fp = fingerprint(t);
    if (!(fingerprint(e) == *fp)) continue;
    if (is_isomorphic(t, e)) return entry.label;
  }
  return std::nullopt;
}

std::optional<std::string> identify(const AutGroupResult& result, std::int64_t p,
                                    std::size_t cap) {
  if (result.order > cap) return std::nullopt;
  return identify(ElementTable::of(result.reduced, cap), p, cap);
}

}  // namespace fgt
