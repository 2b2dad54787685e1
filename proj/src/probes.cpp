#include "fgt/probes.hpp"

#include <numeric>

#include "fgt/error.hpp"
#include "fgt/group_props.hpp"
#include "fgt/presentation.hpp"
#include "fgt/spec.hpp"

namespace fgt {

namespace {

// Action on the union of the cosets of several subgroups; faithful whenever
// the subgroup cores intersect trivially.
PermutationGroup coset_union(const Presentation& pres, const std::vector<std::vector<std::string>>& subs,
                             Json& info) {
  std::vector<CosetTable> tables;
  std::size_t deg = 0;
  for (const auto& sub : subs) {
    std::vector<Word> words;
    for (const auto& w : sub) words.push_back(parse_word(w, pres.alphabet, pres.params));
    tables.push_back(todd_coxeter(pres, words));
    deg += tables.back().index;
    info["coset_indices"].push_back(tables.back().index);
  }
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < pres.alphabet.size(); ++j) {
    std::vector<Point> r(deg);
    std::size_t off = 0;
    for (const auto& ct : tables) {
      const auto& g = ct.group.generators()[j];
      for (std::size_t i = 0; i < ct.index; ++i) r[off + i] = static_cast<Point>(off + g[i]);
      off += ct.index;
    }
    gens.push_back(Permutation::unchecked(std::move(r)));
  }
  return PermutationGroup(deg, std::move(gens), pres.alphabet);
}

// Elements of p-power order, which form the normal Sylow p-subgroup when it exists.
std::vector<Elem> p_elements(const ElementTable& t, std::uint64_t p) {
  std::vector<Elem> out;
  for (Elem x = 0; x < t.size(); ++x) {
    std::uint64_t o = t.order_of(x);
    while (o % p == 0) o /= p;
    if (o == 1) out.push_back(x);
  }
  return out;
}

Json complete_17_6(bool long_running, std::uint64_t max_order) {
  const std::string text =
      "pres{a,b,c,d; a^p=b^p=c^t=a^c*b=b^c*a^x*b^(x^2)=d^4=(a,d)=b^d*(c*a^x*c^-1)^-1=c^d*c^(-p)=1;"
      " p=17, x=6, t=p^2-1}";
  Json out = {{"probe", "complete-17-6"}, {"presentation", text}};
  Presentation pres = parse_presentation(text);
  PermutationGroup g = coset_union(pres, {{"c", "d"}, {"a", "b"}}, out);
  out["degree"] = g.degree();
  out["order"] = g.order();
  out["reference_order"] = 332928;
  if (!long_running || g.order() > max_order) {
    out["complete"] = nullptr;
    out["reason"] = long_running ? "group order exceeds max order" : "needs --include-long-running";
    return out;
  }
  ElementTable t = ElementTable::of(g, static_cast<std::size_t>(max_order));
  out["fingerprint"] = fingerprint_json(fingerprint(t));
  out["complete"] = is_complete(t);
  return out;
}

Json conjecture_17(bool long_running, std::uint64_t max_order) {
  const std::string text =
      "pres{a,b,c,d; a^p=b^q=a^b*a^-x=b^y*(c*d)^-2=a^c*a^t=c^4=d^2=(b,c)=(b,d)=(a*d)^2*(a^-1*d)^2=1;"
      " p=17, q=p-1, x=3, y=q/4, t=4}";
  const std::string acting = "yprod(cyclic(16), wr(cyclic(4)), a^8, a^2*b^-1*a^2*b)";
  const std::string family = "fam16p2(D8,17,D8full)";
  Json out = {{"probe", "conjecture-17"}, {"presentation", text}, {"conjectured_acting_group", acting}};
  Presentation pres = parse_presentation(text);
  PermutationGroup g = coset_union(pres, {{"b", "c", "d"}, {"a", "d*a*d^-1"}}, out);
  const std::size_t cap = static_cast<std::size_t>(max_order);
  ElementTable h = ElementTable::of(build(parse_spec(acting)), cap);
  out["order"] = g.order();
  out["conjectured_order"] = 289 * h.size();
  auto compare = [&](const ElementTable& t, Json& rec) {
    std::vector<Elem> sylow = p_elements(t, 17);
    rec["sylow17_order"] = sylow.size();
    if (!is_normal(t, sylow)) {
      rec["quotient_matches"] = false;
      return;
    }
    ElementTable q = ElementTable::of(quotient_by_normal(t, sylow), cap);
    rec["quotient"] = fingerprint(q).label();
    rec["quotient_matches"] = q.size() == h.size() && is_isomorphic(q, h).has_value();
  };
  Json pres_rec;
  compare(ElementTable::of(g, cap), pres_rec);
  out["presentation_group"] = pres_rec;
  if (long_running) {
    ElementTable base = ElementTable::of(build(parse_spec(family)), cap);
    AutGroupResult r = automorphism_group(base);
    Json aut_rec = {{"group", family}, {"aut_order", r.order}};
    compare(ElementTable::of(r.reduced, cap), aut_rec);
    out["aut_group"] = aut_rec;
  }
  return out;
}

}  // namespace

std::vector<std::string> probe_names() { return {"complete-17-6", "conjecture-17"}; }

Json run_probe(const std::string& name, bool include_long_running, std::uint64_t max_order) {
  if (name == "complete-17-6") return complete_17_6(include_long_running, max_order);
  if (name == "conjecture-17") return conjecture_17(include_long_running, max_order);
  throw InvalidArgument("unknown probe: " + name);
}

}  // namespace fgt
