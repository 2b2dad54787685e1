#include "fgt/matgroups.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "fgt/aut.hpp"
#include "fgt/error.hpp"
#include "fgt/group_props.hpp"
#include "fgt/modular.hpp"
#include "fgt/spec.hpp"

namespace fgt {

std::uint64_t two_part(std::uint64_t n) { return n & (~n + 1); }

namespace {

MatGF embed(const MatGF& m, std::size_t offset, std::size_t n) {
  MatGF r = MatGF::identity(m.p(), n);
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) r.set(offset + i, offset + j, m(i, j));
  return r;
}

std::vector<MatGF> wreath_gens(const std::vector<MatGF>& base) {
  const std::size_t k = base.front().n();
  const std::int64_t p = base.front().p();
  std::vector<MatGF> out;
  for (const auto& g : base) out.push_back(embed(g, 0, 2 * k));
  MatGF swap(p, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    swap.set(i, k + i, 1);
    swap.set(k + i, i, 1);
  }
  out.push_back(swap);
  return out;
}

// Generators of the Sylow 2-subgroup of GL(2^j, p).
std::vector<MatGF> block_gens(unsigned j, std::int64_t p) {
  if (j == 0) {
    std::int64_t t = static_cast<std::int64_t>(two_part(static_cast<std::uint64_t>(p - 1)));
    return {MatGF(p, {{pow_mod(primitive_root(p), static_cast<std::uint64_t>((p - 1) / t), p)}})};
  }
  if (j == 1 && p % 4 == 3) return sylow2_gl2(p).generators;
  return wreath_gens(block_gens(j - 1, p));
}

const std::vector<std::pair<std::string, std::string>>& label_catalog() {
  static const std::vector<std::pair<std::string, std::string>> c = {
      {"C2xC2", "elemab(2,2)"},
      {"C4xC2", "dp(cyclic(4), cyclic(2))"},
      {"E8", "elemab(2,3)"},
      {"D4", "dihedral(4)"},
      {"Q2", "dicyclic(2)"},
      {"C16xC2", "dp(cyclic(16), cyclic(2))"},
      {"C8xC4", "dp(cyclic(8), cyclic(4))"},
      {"D16", "dihedral(16)"},
      {"Q8", "dicyclic(8)"},
      {"QD16", "quasidihedral(16)"},
      {"C4wrC2", "wr(cyclic(4))"},
      {"C8YQ2", "yprod(cyclic(8), dicyclic(2), a^4, a^2)"},
  };
  return c;
}

bool cyclic(const ElementTable& t) {
  for (Elem e = 0; e < t.size(); ++e)
    if (t.order_of(e) == t.size()) return true;
  return false;
}

std::string hash_label(const Fingerprint& f) {
  std::ostringstream s;
  s << f.order << '|' << f.ncl << '|' << f.center_order;
  for (const auto& [o, c] : f.order_histogram) s << '|' << o << ':' << c;
  for (auto d : f.derived_orders) s << '/' << d;
  std::uint32_t h = 2166136261u;
  for (char ch : s.str()) h = (h ^ static_cast<unsigned char>(ch)) * 16777619u;
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", h);
  return buf;
}

struct CatalogEntry {
  std::shared_ptr<const ElementTable> table;
  Fingerprint fp;
};

// Reference groups are built once per process.
const CatalogEntry& catalog_entry(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, CatalogEntry> cache;
  std::string key = print_spec(spec);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto t = std::make_shared<const ElementTable>(ElementTable::of(build(spec), 1u << 20));
    it = cache.emplace(key, CatalogEntry{t, fingerprint(*t)}).first;
  }
  return it->second;
}

std::uint64_t spec_order(const GroupSpec& s) {
  switch (s.kind) {
    case SpecKind::Order16: return 16;
    case SpecKind::Dihedral:
    case SpecKind::Quasidihedral: return static_cast<std::uint64_t>(2 * s.n);
    case SpecKind::Dicyclic: return static_cast<std::uint64_t>(4 * s.n);
    default: return predicted_order(s);
  }
}

bool matches(const ElementTable& t, const Fingerprint& f, const GroupSpec& spec) {
  if (spec_order(spec) != t.size()) return false;
  const CatalogEntry& c = catalog_entry(spec);
  if (!(c.fp == f)) return false;
  return is_isomorphic(t, *c.table).has_value();
}

}  // namespace

MatrixGroup sylow2_gl2(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument("p must be an odd prime");
  MatrixGroup g;
  g.p = p;
  g.n = 2;
  if (p % 4 == 3) {
    unsigned n = two_adic(static_cast<std::uint64_t>(p + 1));
    std::uint64_t want = std::uint64_t{1} << (n + 1);
    for (std::int64_t x = 0; x < p; ++x) {
      MatGF a(p, {{0, 1}, {1, x}});
      if (matrix_order(a) == want) {
        g.generators = {a, MatGF(p, {{1, 0}, {x, -1}})};
        return g;
      }
    }
    throw Error("no companion matrix of the required order");
  }
  unsigned n = two_adic(static_cast<std::uint64_t>(p - 1));
  std::int64_t z = pow_mod(primitive_root(p), static_cast<std::uint64_t>((p - 1) >> n), p);
  g.generators = {MatGF::diagonal(p, {1, z}), MatGF(p, {{0, 1}, {1, 0}})};
  return g;
}

MatrixGroup sylow2_gln(unsigned n, std::int64_t p) {
  if (n < 1) throw InvalidArgument("dimension must be positive");
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument("p must be an odd prime");
  MatrixGroup g;
  g.p = p;
  g.n = n;
  std::size_t offset = 0;
  for (unsigned j = 31; j-- > 0;) {
    if (!((n >> j) & 1u)) continue;
    for (const auto& m : block_gens(j, p)) g.generators.push_back(embed(m, offset, n));
    offset += std::size_t{1} << j;
  }
  return g;
}

std::string group_label(const ElementTable& t) {
  const std::size_t n = t.size();
  if (cyclic(t)) return "C" + std::to_string(n);
  Fingerprint f = fingerprint(t);
  if (n == 16) {
    for (const auto& name : order16_names())
      if (matches(t, f, order16_spec(name))) return name;
  }
  for (const auto& [label, text] : label_catalog()) {
    GroupSpec s = parse_spec(text);
    if (matches(t, f, s)) return label;
  }
  if (n >= 16 && two_part(n) == n) {
    std::vector<std::pair<std::string, GroupSpec>> fam;
    GroupSpec d, q, qd;
    d.kind = SpecKind::Dihedral;
    d.n = static_cast<std::int64_t>(n / 2);
    q.kind = SpecKind::Dicyclic;
    q.n = static_cast<std::int64_t>(n / 4);
    qd.kind = SpecKind::Quasidihedral;
    qd.n = static_cast<std::int64_t>(n / 2);
    fam = {{"D" + std::to_string(n / 2), d}, {"QD" + std::to_string(n / 2), qd}, {"Q" + std::to_string(n / 4), q}};
    for (std::uint64_t m = 2; m * m * 2 <= n; m *= 2)
      if (m * m * 2 == n) fam.push_back({"C" + std::to_string(m) + "wrC2", wr_spec(cyclic_spec(static_cast<std::int64_t>(m)))});
    for (const auto& [label, s] : fam)
      if (matches(t, f, s)) return label;
  }
  return "order" + std::to_string(n) + "-fp:" + hash_label(f);
}

std::string group_label(const PermutationGroup& g) { return group_label(ElementTable::of(g)); }

std::map<std::string, std::size_t> subgroup_inventory(const PermutationGroup& g, std::size_t k) {
  ElementTable t = ElementTable::of(g);
  std::map<std::string, std::size_t> out;
  if (k == 0 || t.size() % k) return out;
  std::set<std::vector<Elem>> cyclics;
  for (Elem x = 0; x < t.size(); ++x)
    if (t.order_of(x) <= k) cyclics.insert(subgroup_closure(t, {x}));
  std::set<std::vector<Elem>> seen(cyclics.begin(), cyclics.end());
  std::vector<std::vector<Elem>> frontier(cyclics.begin(), cyclics.end());
  std::vector<std::vector<Elem>> hits;
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& h : frontier) {
      if (h.size() == k) {
        hits.push_back(h);
        continue;
      }
      for (const auto& c : cyclics) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        std::vector<Elem> inter;
        std::set_intersection(h.begin(), h.end(), c.begin(), c.end(), std::back_inserter(inter));
        if (h.size() * c.size() / inter.size() > k) continue;
        std::vector<Elem> gens = subgroup_generators(t, h);
        gens.push_back(c[1]);
        for (Elem e : c)
          if (t.order_of(e) == c.size()) {
            gens.back() = e;
            break;
          }
        auto j = subgroup_closure(t, gens);
        if (j.size() <= k && seen.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& h : hits) {
    std::vector<Permutation> perms;
    for (Elem e : subgroup_generators(t, h)) perms.push_back(t.element(e));
    PermutationGroup sub(t.degree(), perms);
    ++out[group_label(ElementTable::of(sub))];
  }
  return out;
}

std::map<std::uint64_t, std::string> class_order_structure(const PermutationGroup& g) {
  ElementTable t = ElementTable::of(g);
  std::map<std::uint64_t, std::map<std::size_t, std::size_t>> sizes;
  for (const auto& c : conjugacy_classes(t)) ++sizes[t.order_of(c.rep)][c.members.size()];
  std::map<std::uint64_t, std::string> out;
  for (const auto& [ord, prof] : sizes) {
    std::ostringstream s;
    bool first = true;
    for (const auto& [size, mult] : prof) {
      s << (first ? "" : ",") << size;
      if (mult > 1) s << '^' << mult;
      first = false;
    }
    out[ord] = prof.size() > 1 ? "(" + s.str() + ")" : s.str();
  }
  return out;
}

}  // namespace fgt
