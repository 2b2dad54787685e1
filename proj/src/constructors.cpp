#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fgt/aut.hpp"
#include "fgt/error.hpp"
#include "fgt/group_props.hpp"
#include "fgt/modular.hpp"
#include "fgt/spec.hpp"

namespace fgt {

namespace {

const std::vector<std::pair<std::string, std::string>>& order16_table() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"C16", "a; a^16=1"},
      {"C8xC2", "a,b; a^8=b^2=(a,b)=1"},
      {"C4xC4", "a,b; a^4=b^4=(a,b)=1"},
      {"C4xC2xC2", "a,b,c; a^4=b^2=c^2=(a,b)=(a,c)=(b,c)=1"},
      {"E16", "a,b,c,d; a^2=b^2=c^2=d^2=(a,b)=(a,c)=(a,d)=(b,c)=(b,d)=(c,d)=1"},
      {"D4xC2", "a,b,c; a^4=b^2=a^b*a=c^2=(a,c)=(b,c)=1"},
      {"Q2xC2", "a,b,c; a^4=b^4=a^2*b^2=a^b*a=c^2=(a,c)=(b,c)=1"},
      {"C4YQ2", "a,b,c; a^2=b^2=c^4=a^b*c^2*a=a^c*a=b^c*b=1"},
      {"G44_22", "a,b,c; a^4=b^2=c^2=(a,b)=(b,c)=a^c*a^-1*b=1"},
      {"C4sC4", "a,b; a^4=b^4=a^b*a=1"},
      {"M16", "a,b; a^8=b^2=a^b*a^-5=1"},
      {"D8", "a,b; a^8=b^2=a^b*a=1"},
      {"QD8", "a,b; a^8=b^2=a^b*a^-3=1"},
      {"Q4", "a,b; a^8=b^4=a^4*b^-2=a^b*a=1"},
  };
  return t;
}

PermutationGroup regular(const Presentation& pres) {
  CosetTable ct = todd_coxeter(pres);
  if (ct.index > std::max<std::size_t>(default_element_cap(), kDefaultMaxCosets))
    throw CapExceeded("presentation index exceeds the element cap");
  return ct.group;
}

PermutationGroup cyclic_group(std::int64_t n) {
  if (n < 1) throw InvalidArgument("cyclic order must be positive");
  std::vector<Point> r(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) r[i] = static_cast<Point>((i + 1) % n);
  return PermutationGroup(static_cast<std::size_t>(n), {Permutation::unchecked(r)}, {"a"});
}

std::vector<std::string> merged_names(const std::vector<const PermutationGroup*>& parts) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool clash = false;
  for (const auto* g : parts)
    for (const auto& nm : g->names()) {
      clash |= !seen.insert(nm).second;
      names.push_back(nm);
    }
  if (clash) return default_names(names.size());
  return names;
}

// Disjoint union; generators keep their order.
PermutationGroup disjoint_union(const std::vector<const PermutationGroup*>& parts,
                                std::vector<std::size_t>* offsets = nullptr) {
  std::size_t deg = 0;
  for (const auto* g : parts) deg += g->degree();
  std::vector<Permutation> gens;
  std::size_t off = 0;
  for (const auto* g : parts) {
    if (offsets) offsets->push_back(off);
    for (const auto& x : g->generators()) {
      std::vector<Point> r(deg);
      std::iota(r.begin(), r.end(), Point{0});
      for (std::size_t i = 0; i < g->degree(); ++i) r[off + i] = static_cast<Point>(off + x[i]);
      gens.push_back(Permutation::unchecked(std::move(r)));
    }
    off += g->degree();
  }
  return PermutationGroup(deg, std::move(gens), merged_names(parts));
}

std::size_t ipow(std::int64_t b, std::int64_t e) {
  std::size_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
  return r;
}

struct PPart {
  std::int64_t modulus;
  std::size_t rank;
};

PPart p_part_shape(const GroupSpec& s) {
  if (s.kind == SpecKind::ElemAbelian) return {s.n, static_cast<std::size_t>(s.k)};
  if (s.kind == SpecKind::Cyclic) return {s.n, 1};
  throw InvalidArgument("semidirect normal part must be cyclic(n) or elemab(p,k)");
}

std::vector<std::int64_t> digits(std::size_t idx, std::int64_t m, std::size_t k) {
  std::vector<std::int64_t> v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(m));
    idx /= static_cast<std::size_t>(m);
  }
  return v;
}

std::size_t undigits(const std::vector<std::int64_t>& v, std::int64_t m) {
  std::size_t idx = 0;
  for (auto x : v) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(mod(x, m));
  return idx;
}

Permutation affine_matrix(const IntMatrix& a, std::int64_t m, std::size_t k) {
  std::size_t n = ipow(m, static_cast<std::int64_t>(k));
  std::vector<Point> r(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    auto v = digits(idx, m, k);
    std::vector<std::int64_t> w(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += static_cast<__int128>(v[i]) * a[i][j];
      w[j] = mod(static_cast<std::int64_t>(acc % m), m);
    }
    r[idx] = static_cast<Point>(undigits(w, m));
  }
  std::vector<char> seen(n, 0);
  for (Point x : r) {
    if (seen[x]) throw InvalidArgument("action matrix is not invertible");
    seen[x] = 1;
  }
  return Permutation::unchecked(std::move(r));
}

Permutation translation(std::size_t i, std::int64_t m, std::size_t k) {
  std::size_t n = ipow(m, static_cast<std::int64_t>(k));
  std::vector<Point> r(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    auto v = digits(idx, m, k);
    v[i] += 1;
    r[idx] = static_cast<Point>(undigits(v, m));
  }
  return Permutation::unchecked(std::move(r));
}

Permutation extend_to(const Permutation& x, std::size_t offset, std::size_t degree) {
  std::vector<Point> r(degree);
  std::iota(r.begin(), r.end(), Point{0});
  for (std::size_t i = 0; i < x.degree(); ++i) r[offset + i] = static_cast<Point>(offset + x[i]);
  return Permutation::unchecked(std::move(r));
}

Permutation combine(const Permutation& a, const Permutation& b) {
  std::vector<Point> r(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.degree(); ++i) r[a.degree() + i] = static_cast<Point>(a.degree() + b[i]);
  return Permutation::unchecked(std::move(r));
}

std::vector<IntMatrix> to_int(const std::vector<MatGF>& ms) {
  std::vector<IntMatrix> out;
  for (const auto& m : ms) {
    IntMatrix a(m.n(), std::vector<std::int64_t>(m.n()));
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = 0; j < m.n(); ++j) a[i][j] = m(i, j);
    out.push_back(std::move(a));
  }
  return out;
}

PermutationGroup semidirect(const GroupSpec& s) {
  const PPart pp = p_part_shape(s.children.at(0));
  PermutationGroup acting = build(s.children.at(1));
  std::vector<IntMatrix> action;
  if (!s.preset.empty()) {
    if (!is_prime(static_cast<std::uint64_t>(pp.modulus)))
      throw InvalidArgument("presets need a prime-order normal part");
    action = to_int(preset_action(s.preset, s.preset_params, pp.modulus, pp.rank, acting));
  } else {
    if (s.modulus != pp.modulus)
      throw InvalidArgument("action modulus must match the normal part");
    action = s.action;
  }
  if (action.size() != acting.generators().size())
    throw InvalidArgument("need one action matrix per acting generator");
  for (const auto& a : action) {
    if (a.size() != pp.rank) throw InvalidArgument("action matrix has the wrong size");
    for (const auto& row : a)
      if (row.size() != pp.rank) throw InvalidArgument("action matrix has the wrong size");
  }
  std::vector<Permutation> mats;
  for (const auto& a : action) mats.push_back(affine_matrix(a, pp.modulus, pp.rank));
  const std::size_t vdeg = ipow(pp.modulus, static_cast<std::int64_t>(pp.rank));
  const std::uint64_t t_order = acting.order();

  std::vector<Permutation> paired;
  for (std::size_t j = 0; j < mats.size(); ++j) paired.push_back(combine(mats[j], acting.generators()[j]));
  if (PermutationGroup(vdeg + acting.degree(), paired).order() != t_order)
    throw InvalidArgument("action does not respect the relators of the acting group");
  bool faithful = mats.empty() ? t_order == 1 : PermutationGroup(vdeg, mats).order() == t_order;

  const std::size_t deg = faithful ? vdeg : vdeg + acting.degree();
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  static const char* pnames[] = {"x", "y", "z", "w", "u", "v"};
  for (std::size_t i = 0; i < pp.rank; ++i) {
    gens.push_back(extend_to(translation(i, pp.modulus, pp.rank), 0, deg));
    names.push_back(i < 6 ? pnames[i] : "x" + std::to_string(i));
  }
  for (std::size_t j = 0; j < mats.size(); ++j) {
    gens.push_back(faithful ? mats[j] : paired[j]);
    names.push_back(acting.names()[j]);
  }
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) names = default_names(names.size());
  return PermutationGroup(deg, std::move(gens), std::move(names));
}

PermutationGroup wreath(const PermutationGroup& a) {
  const std::size_t n = a.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(extend_to(g, 0, 2 * n));
  std::vector<Point> sw(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    sw[i] = static_cast<Point>(i + n);
    sw[i + n] = static_cast<Point>(i);
  }
  gens.push_back(Permutation::unchecked(std::move(sw)));
  return PermutationGroup(2 * n, gens);
}

PermutationGroup central(const GroupSpec& s) {
  PermutationGroup a = build(s.children.at(0));
  PermutationGroup b = build(s.children.at(1));
  Permutation za = evaluate_word(parse_word(s.za, a.names()), a.generators());
  Permutation zb = evaluate_word(parse_word(s.zb, b.names()), b.generators());
  for (const auto& g : a.generators())
    if (compose(g, za) != compose(za, g)) throw InvalidArgument("identified element is not central in the first factor");
  for (const auto& g : b.generators())
    if (compose(g, zb) != compose(zb, g)) throw InvalidArgument("identified element is not central in the second factor");
  if (za.order() != zb.order()) throw InvalidArgument("identified subgroups have different orders");
  std::vector<std::size_t> off;
  PermutationGroup u = disjoint_union({&a, &b}, &off);
  Permutation z = compose(extend_to(za, 0, u.degree()), extend_to(zb.inverse(), off[1], u.degree()));
  ElementTable t = ElementTable::of(u);
  Elem zi = t.find(z);
  return quotient_by_normal(t, subgroup_closure(t, {zi}), u.names());
}

PermutationGroup holomorph(const PermutationGroup& a) {
  ElementTable t = ElementTable::of(a);
  AutOptions o;
  o.compute_fingerprint = false;
  AutGroupResult aut = automorphism_group(t, {}, o);
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < t.generators().size(); ++j) {
    std::vector<Point> r(t.size());
    for (Elem x = 0; x < t.size(); ++x) r[x] = t.mul_gen(x, j);
    gens.push_back(Permutation::unchecked(std::move(r)));
  }
  for (const auto& g : aut.generators) gens.push_back(g.element_permutation);
  return PermutationGroup(t.size(), std::move(gens));
}

Presentation named_presentation(const std::string& text) { return parse_presentation(text); }

std::int64_t unit_of_order(std::int64_t p, std::int64_t m) {
  if ((p - 1) % m) throw InvalidArgument("no unit of order " + std::to_string(m) + " mod " + std::to_string(p));
  return pow_mod(primitive_root(p), static_cast<std::uint64_t>((p - 1) / m), p);
}

std::int64_t param_or(const Params& ps, const std::string& key, std::int64_t dflt) {
  auto it = ps.find(key);
  return it == ps.end() ? dflt : it->second;
}

// Smallest x with 2x^2 = target mod p.
std::int64_t half_square_root(std::int64_t p, std::int64_t target) {
  for (std::int64_t x = 1; x < p; ++x)
    if (mod(2 * x * x - target, p) == 0) return x;
  throw InvalidArgument("no x with 2x^2 = " + std::to_string(target) + " mod " + std::to_string(p));
}

std::pair<std::int64_t, std::int64_t> sum_two_squares_minus_one(std::int64_t p) {
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y)
      if (mod(x * x + y * y + 1, p) == 0) return {x, y};
  throw InvalidArgument("no x, y with x^2+y^2 = -1");
}

std::pair<std::int64_t, std::int64_t> companion_of_order(std::int64_t p, std::uint64_t ord) {
  for (std::int64_t x = 1; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y)
      if (matrix_order(MatGF(p, {{0, 1}, {x, y}})) == ord) return {x, y};
  throw InvalidArgument("no companion matrix of order " + std::to_string(ord) + " mod " + std::to_string(p));
}

const std::vector<std::string> kPresets = {"C4_a", "C4_ab", "C8", "QD8full", "D8full",
                                           "Q4full", "C16full", "Q2", "scalar_QD"};

struct Table2aRow {
  const char* name;
  const char* image;
  const char* letters;
  const char* factor;
};

const std::vector<Table2aRow>& table2a_rows() {
  static const std::vector<Table2aRow> rows = {
      {"C16", "C2", "a", "C4xC2"},        {"C8xC2", "C2", "a", "D4xC2"},
      {"C8xC2", "C2", "b", "1^3"},        {"C4xC4", "C2", "a", "1^2wrC2"},
      {"C4xC2xC2", "C2", "a", "Aut(2,1^2)"}, {"C4xC2xC2", "C2", "b", "1^2wrC2"},
      {"E16", "C2", "a", "Hol(1^3)"},     {"D4xC2", "C2", "b", "Hol(2,1)"},
      {"D4xC2", "C2", "a", "1^2wrC2"},    {"D4xC2", "C2", "c", "D4xC2"},
      {"Q2xC2", "C2", "c", "S4xC2"},      {"Q2xC2", "C2", "b", "Hol(2,1)"},
      {"C4YQ2", "C2", "abc", "S4xC2"},    {"C4YQ2", "C2", "bc", "D4xC2"},
      {"C4YQ2", "C2", "ac", "D4xC2"},     {"G44_22", "C2", "a", "1^2wrC2"},
      {"G44_22", "C2", "c", "1^4"},       {"C4sC4", "C2", "b", "1^2wrC2"},
      {"C4sC4", "C2", "a", "1^4"},        {"M16", "C2", "a", "1^2wrC2"},
      {"M16", "C2", "b", "1^3"},          {"D8", "C2", "b", "Hol(C8)"},
      {"D8", "C2", "a", "D4xC2"},         {"QD8", "C2", "a", "D4xC2"},
      {"QD8", "C2", "b", "D4xC2"},        {"QD8", "C2", "ab", "D4xC2"},
      {"Q4", "C2", "b", "Hol(C8)"},       {"Q4", "C2", "a", "D4xC2"},
      {"C16", "C4", "a", "C4"},           {"C8xC2", "C4", "a", "D4"},
      {"C8xC2", "C4", "ab", "D4"},        {"C4xC4", "C4", "a", "D4"},
      {"C4xC2xC2", "C4", "a", "S4"},      {"G44_22", "C4", "a", "D4"},
      {"C4sC4", "C4", "b", "D4"},         {"M16", "C4", "a", "D4"},
      {"M16", "C4", "ab", "D4"},          {"C16", "C8", "a", "C2"},
      {"C8xC2", "C8", "a", "C2"},         {"C16", "C16", "a", "I"},
  };
  return rows;
}

}  // namespace

const std::vector<std::string>& order16_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, _] : order16_table()) v.push_back(n);
    return v;
  }();
  return names;
}

Presentation order16_presentation(const std::string& name) {
  for (const auto& [n, text] : order16_table())
    if (n == name) return named_presentation(text);
  throw InvalidArgument("unknown order-16 group name: " + name);
}

const std::vector<std::string>& preset_names() { return kPresets; }

std::vector<MatGF> preset_action(const std::string& preset, const Params& params, std::int64_t p,
                                 std::size_t rank, const PermutationGroup& acting) {
  const auto& names = acting.names();
  const std::size_t ng = names.size();
  auto ident = [&] { return MatGF::identity(p, rank); };
  std::vector<MatGF> out(ng, ident());
  auto need_rank2 = [&] {
    if (rank != 2) throw InvalidArgument("preset " + preset + " needs a rank-2 normal part");
  };
  auto need_gens = [&](std::size_t k) {
    if (ng < k) throw InvalidArgument("preset " + preset + " needs " + std::to_string(k) + " acting generators");
  };
  if (preset == "C4_a" || preset == "C4_ab") {
    need_rank2();
    need_gens(preset == "C4_ab" ? 2 : 1);
    out[0] = MatGF(p, {{0, 1}, {-1, 0}});
    if (preset == "C4_ab") out[1] = MatGF::scalar(p, 2, -1);
  } else if (preset == "C8" || preset == "C16full") {
    need_rank2();
    need_gens(1);
    auto [x0, y0] = companion_of_order(p, preset == "C8" ? 8 : 16);
    out[0] = MatGF(p, {{0, 1}, {param_or(params, "x", x0), param_or(params, "y", y0)}});
  } else if (preset == "QD8full" || preset == "D8full" || preset == "Q4full") {
    need_rank2();
    need_gens(2);
    // Q4 needs d^-1 c d = c^-1, which holds for the 2x^2 = 1 form of c.
    std::int64_t x0 = half_square_root(p, preset == "QD8full" ? -1 : 1);
    std::int64_t x = param_or(params, "x", x0);
    out[0] = MatGF(p, {{x, x}, {-x, x}});
    if (preset == "Q4full") {
      auto [u0, v0] = sum_two_squares_minus_one(p);
      std::int64_t u = param_or(params, "u", u0), v = param_or(params, "v", v0);
      out[1] = MatGF(p, {{u, v}, {v, -u}});
    } else {
      out[1] = MatGF::diagonal(p, {1, -1});
    }
  } else if (preset == "scalar_QD") {
    // Acting group Cq x QD: scalars of order q, then a of order m with
    // a^b = a^(m/2-1).
    need_rank2();
    need_gens(3);
    const auto& ag = acting.generators();
    std::uint64_t q = ag[0].order(), m = ag[1].order();
    if ((p - 1) % static_cast<std::int64_t>(q) != 0)
      throw InvalidArgument("no scalar of order " + std::to_string(q) + " mod " + std::to_string(p));
    out[0] = MatGF::scalar(p, 2, unit_of_order(p, static_cast<std::int64_t>(q)));
    auto [x0, y0] = companion_of_order(p, m);
    out[1] = MatGF(p, {{0, 1}, {x0, y0}});
    MatGF target = mat_pow(out[1], static_cast<std::int64_t>(m / 2 - 1));
    bool found = false;
    for (std::int64_t e = 0; e < p * p * p * p && !found; ++e) {
      MatGF b(p, {{e % p, e / p % p}, {e / (p * p) % p, e / (p * p * p)}});
      if (!b.invertible() || !(b * b).is_identity()) continue;
      if (b.inverse() * out[1] * b == target) {
        out[2] = b;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("no quasidihedral pair of order " + std::to_string(2 * m) + " mod " + std::to_string(p));
  } else if (preset == "Q2") {
    need_rank2();
    need_gens(2);
    auto [x0, y0] = sum_two_squares_minus_one(p);
    std::int64_t x = param_or(params, "x", x0), y = param_or(params, "y", y0);
    out[0] = MatGF(p, {{x, y}, {y, -x}});
    out[1] = MatGF(p, {{0, 1}, {-1, 0}});
  } else {
    // Letter sets: "ab_b" inverts the first coordinate under a and b and the
    // second under b; without '_' (rank 1) the listed generators invert.
    auto pos = preset.find('_');
    std::vector<std::string> sets;
    if (pos == std::string::npos) {
      if (rank != 1) throw InvalidArgument("unknown preset: " + preset);
      sets = {preset};
    } else {
      if (rank != 2 || preset.find('_', pos + 1) != std::string::npos)
        throw InvalidArgument("unknown preset: " + preset);
      sets = {preset.substr(0, pos), preset.substr(pos + 1)};
    }
    std::vector<std::vector<std::int64_t>> diag(ng, std::vector<std::int64_t>(rank, 1));
    for (std::size_t c = 0; c < sets.size(); ++c)
      for (char ch : sets[c]) {
        auto it = std::find(names.begin(), names.end(), std::string(1, ch));
        if (it == names.end()) throw InvalidArgument("unknown preset: " + preset);
        diag[static_cast<std::size_t>(it - names.begin())][c] = -1;
      }
    for (std::size_t j = 0; j < ng; ++j) out[j] = MatGF::diagonal(p, diag[j]);
  }
  return out;
}

GroupSpec table2a_factor(const std::string& label) {
  if (label == "C4xC2") return dp_spec({cyclic_spec(4), cyclic_spec(2)});
  if (label == "D4xC2") {
    GroupSpec d;
    d.kind = SpecKind::Dihedral;
    d.n = 4;
    return dp_spec({d, cyclic_spec(2)});
  }
  if (label == "D4") {
    GroupSpec d;
    d.kind = SpecKind::Dihedral;
    d.n = 4;
    return d;
  }
  if (label == "1^3") return elemab_spec(2, 3);
  if (label == "1^4") return elemab_spec(2, 4);
  if (label == "1^2wrC2") return wr_spec(elemab_spec(2, 2));
  if (label == "Aut(2,1^2)") return aut_spec(order16_spec("C4xC2xC2"));
  if (label == "Hol(1^3)") return hol_spec(elemab_spec(2, 3));
  if (label == "Hol(2,1)") return hol_spec(dp_spec({cyclic_spec(4), cyclic_spec(2)}));
  if (label == "S4xC2") return dp_spec({hol_spec(elemab_spec(2, 2)), cyclic_spec(2)});
  if (label == "S4") return hol_spec(elemab_spec(2, 2));
  if (label == "Hol(C8)") return hol_spec(cyclic_spec(8));
  if (label == "C4") return cyclic_spec(4);
  if (label == "C2") return cyclic_spec(2);
  if (label == "I") return cyclic_spec(1);
  throw InvalidArgument("unknown factor label: " + label);
}

Family16p family_16p(const std::string& name, std::int64_t p, const std::string& image,
                     const std::string& letters) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument("p must be an odd prime");
  std::int64_t m;
  if (image == "C2") m = 2;
  else if (image == "C4") m = 4;
  else if (image == "C8") m = 8;
  else if (image == "C16") m = 16;
  else throw InvalidArgument("image must be C2, C4, C8 or C16");
  if ((p - 1) % m) throw InvalidArgument(image + " image needs p = 1 mod " + std::to_string(m));
  Presentation pres = order16_presentation(name);
  if (letters.empty()) throw InvalidArgument("no acting generators given");
  std::vector<IntMatrix> action(pres.alphabet.size(), IntMatrix{{1}});
  bool first = true;
  for (char ch : letters) {
    auto it = std::find(pres.alphabet.begin(), pres.alphabet.end(), std::string(1, ch));
    if (it == pres.alphabet.end()) throw InvalidArgument(std::string("no generator ") + ch + " in " + name);
    auto j = static_cast<std::size_t>(it - pres.alphabet.begin());
    action[j] = IntMatrix{{first && m > 2 ? unit_of_order(p, m) : p - 1}};
    first = false;
  }
  Family16p out;
  out.group = build(sd_matrices_spec(cyclic_spec(p), order16_spec(name), action, p));
  for (const auto& row : table2a_rows())
    if (name == row.name && image == row.image && letters == row.letters) {
      out.factor_label = row.factor;
      GroupSpec hol = hol_spec(cyclic_spec(p));
      out.expected_aut = std::string(row.factor) == "I" ? hol : dp_spec({hol, table2a_factor(row.factor)});
    }
  return out;
}

PermutationGroup build(const GroupSpec& s) {
  switch (s.kind) {
    case SpecKind::Cyclic:
      return cyclic_group(s.n);
    case SpecKind::ElemAbelian: {
      if (s.n < 2 || s.k < 1) throw InvalidArgument("elemab needs a prime and a positive rank");
      std::vector<PermutationGroup> parts(static_cast<std::size_t>(s.k), cyclic_group(s.n));
      std::vector<const PermutationGroup*> ptrs;
      for (const auto& g : parts) ptrs.push_back(&g);
      PermutationGroup u = disjoint_union(ptrs);
      u.set_names(default_names(static_cast<std::size_t>(s.k)));
      return u;
    }
    case SpecKind::DirectProduct: {
      std::vector<PermutationGroup> parts;
      for (const auto& c : s.children) parts.push_back(build(c));
      std::vector<const PermutationGroup*> ptrs;
      for (const auto& g : parts) ptrs.push_back(&g);
      return disjoint_union(ptrs);
    }
    case SpecKind::Semidirect:
      return semidirect(s);
    case SpecKind::Wreath:
      return wreath(build(s.children.at(0)));
    case SpecKind::Central:
      return central(s);
    case SpecKind::Holomorph:
      return holomorph(build(s.children.at(0)));
    case SpecKind::Order16:
      return regular(order16_presentation(s.name));
    case SpecKind::Dihedral: {
      if (s.n < 1) throw InvalidArgument("dihedral index must be positive");
      if (s.n < 3) return regular(parse_presentation("a,b; a^n=b^2=(a*b)^2=1", {{"n", s.n}}));
      std::vector<Point> rot(static_cast<std::size_t>(s.n)), ref(static_cast<std::size_t>(s.n));
      for (std::int64_t i = 0; i < s.n; ++i) {
        rot[i] = static_cast<Point>((i + 1) % s.n);
        ref[i] = static_cast<Point>((s.n - i) % s.n);
      }
      return PermutationGroup(static_cast<std::size_t>(s.n),
                              {Permutation::unchecked(rot), Permutation::unchecked(ref)}, {"a", "b"});
    }
    case SpecKind::Quasidihedral: {
      if (s.n < 8 || (s.n & (s.n - 1))) throw InvalidArgument("quasidihedral index must be a power of 2, at least 8");
      return regular(parse_presentation("a,b; a^k=b^2=a^b*a^-{k/2-1}=1", {{"k", s.n}}));
    }
    case SpecKind::Dicyclic: {
      if (s.n < 2) throw InvalidArgument("dicyclic index must be at least 2");
      return regular(parse_presentation("a,b; a^{2*n}=a^n*b^-2=a^b*a=1", {{"n", s.n}}));
    }
    case SpecKind::Presentation:
      return regular(parse_presentation(s.pres));
    case SpecKind::Family16p:
      return family_16p(s.name, s.n, s.image, s.letters).group;
    case SpecKind::Family16p2:
      return build(sd_preset_spec(elemab_spec(s.n, 2), order16_spec(s.name), s.preset, s.preset_params));
    case SpecKind::AutOf: {
      ElementTable t = ElementTable::of(build(s.children.at(0)));
      AutOptions o;
      o.compute_fingerprint = false;
      return automorphism_group(t, {}, o).reduced;
    }
  }
  throw InvalidArgument("unknown spec kind");
}

std::uint64_t predicted_order(const GroupSpec& s) {
  auto aut_order = [](const GroupSpec& a) {
    ElementTable t = ElementTable::of(build(a));
    AutOptions o;
    o.compute_fingerprint = false;
    return automorphism_group(t, {}, o).order;
  };
  switch (s.kind) {
    case SpecKind::Cyclic: return static_cast<std::uint64_t>(s.n);
    case SpecKind::ElemAbelian: return ipow(s.n, s.k);
    case SpecKind::DirectProduct: {
      std::uint64_t r = 1;
      for (const auto& c : s.children) r *= predicted_order(c);
      return r;
    }
    case SpecKind::Semidirect:
      return predicted_order(s.children.at(0)) * predicted_order(s.children.at(1));
    case SpecKind::Wreath: {
      std::uint64_t a = predicted_order(s.children.at(0));
      return a * a * 2;
    }
    case SpecKind::Central: {
      PermutationGroup a = build(s.children.at(0));
      Permutation za = evaluate_word(parse_word(s.za, a.names()), a.generators());
      return predicted_order(s.children.at(0)) * predicted_order(s.children.at(1)) / za.order();
    }
    case SpecKind::Holomorph:
      return predicted_order(s.children.at(0)) * aut_order(s.children.at(0));
    case SpecKind::Order16: return 16;
    case SpecKind::Dihedral: return static_cast<std::uint64_t>(2 * s.n);
    case SpecKind::Quasidihedral: return static_cast<std::uint64_t>(2 * s.n);
    case SpecKind::Dicyclic: return static_cast<std::uint64_t>(4 * s.n);
    case SpecKind::Presentation: return todd_coxeter(parse_presentation(s.pres)).index;
    case SpecKind::Family16p: return static_cast<std::uint64_t>(16 * s.n);
    case SpecKind::Family16p2: return static_cast<std::uint64_t>(16 * s.n * s.n);
    case SpecKind::AutOf: return aut_order(s.children.at(0));
  }
  return 0;
}

}  // namespace fgt
