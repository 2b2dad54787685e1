#include "fgt/group_props.hpp"

#include <algorithm>
#include <sstream>

#include "fgt/error.hpp"

namespace fgt {

namespace {

// Grows `members` (closed under the current gens) by right multiplication.
struct Closure {
  const ElementTable& t;
  std::vector<char> in;
  std::vector<Elem> members;
  std::vector<Elem> gens;

  explicit Closure(const ElementTable& tab) : t(tab), in(tab.size(), 0) {
    in[0] = 1;
    members.push_back(0);
  }

  bool contains(Elem e) const { return in[e] != 0; }

  void add_generator(Elem g) {
    if (in[g]) return;
    gens.push_back(g);
    // Every existing element times the new generator, then close.
    std::size_t frontier = 0;
    std::vector<Elem> queue;
    for (Elem m : members) {
      Elem x = t.mul(m, g);
      if (!in[x]) {
        in[x] = 1;
        queue.push_back(x);
      }
    }
    while (frontier < queue.size()) {
      Elem e = queue[frontier++];
      for (Elem h : gens) {
        Elem x = t.mul(e, h);
        if (!in[x]) {
          in[x] = 1;
          queue.push_back(x);
        }
      }
    }
    members.insert(members.end(), queue.begin(), queue.end());
  }

  std::vector<Elem> sorted() const {
    std::vector<Elem> out = members;
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<Elem> normal_closure_impl(const ElementTable& t, const std::vector<Elem>& gens,
                                      const std::vector<Elem>& under) {
  Closure c(t);
  std::vector<Elem> pending(gens.begin(), gens.end());
  while (!pending.empty()) {
    Elem g = pending.back();
    pending.pop_back();
    if (c.contains(g)) continue;
    c.add_generator(g);
    for (Elem h : under) pending.push_back(t.conj(g, h));
  }
  // Conjugates of later generators by earlier ones are already queued above,
  // so the closure is normalized by `under`.
  return c.sorted();
}

std::vector<Elem> commutator_gens(const ElementTable& t, const std::vector<Elem>& gens) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Elem c = t.commutator(gens[i], gens[j]);
      if (c != 0) out.push_back(c);
    }
  return out;
}

}  // namespace

std::vector<std::uint32_t> class_ids(const ElementTable& t) {
  const std::size_t n = t.size();
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> id(n, unset);
  const auto& gens = t.generators();
  std::vector<Elem> gen_inv;
  for (Elem g : gens) gen_inv.push_back(t.inv(g));
  std::uint32_t next = 0;
  std::vector<Elem> queue;
  for (Elem e = 0; e < n; ++e) {
    if (id[e] != unset) continue;
    id[e] = next;
    queue.assign(1, e);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Elem x = queue[k];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem y = t.mul(gen_inv[j], t.mul(x, gens[j]));
        if (id[y] == unset) {
          id[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<ConjugacyClass> conjugacy_classes(const ElementTable& t) {
  auto id = class_ids(t);
  std::uint32_t count = 0;
  for (auto v : id) count = std::max(count, v + 1);
  std::vector<ConjugacyClass> out(count);
  for (Elem e = 0; e < t.size(); ++e) {
    auto& c = out[id[e]];
    if (c.members.empty()) c.rep = e;
    c.members.push_back(e);
  }
  return out;
}

std::vector<Elem> center(const ElementTable& t) {
  std::vector<Elem> out;
  const auto& gens = t.generators();
  for (Elem e = 0; e < t.size(); ++e) {
    bool central = true;
    for (Elem g : gens)
      if (t.mul(e, g) != t.mul(g, e)) {
        central = false;
        break;
      }
    if (central) out.push_back(e);
  }
  return out;
}

std::vector<Elem> subgroup_closure(const ElementTable& t, const std::vector<Elem>& gens) {
  Closure c(t);
  for (Elem g : gens) c.add_generator(g);
  return c.sorted();
}

std::vector<Elem> normal_closure(const ElementTable& t, const std::vector<Elem>& gens,
                                 const std::vector<Elem>& under) {
  return normal_closure_impl(t, gens, under.empty() ? t.generators() : under);
}

std::vector<Elem> subgroup_generators(const ElementTable& t, const std::vector<Elem>& sub) {
  Closure c(t);
  // Prefer high-order elements so few generators are needed.
  std::vector<Elem> order = sub;
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return t.order_of(a) > t.order_of(b); });
  for (Elem e : order) {
    if (c.members.size() == sub.size()) break;
    if (!c.contains(e)) c.add_generator(e);
  }
  return c.gens;
}

bool is_normal(const ElementTable& t, const std::vector<Elem>& sub) {
  std::vector<char> in(t.size(), 0);
  for (Elem e : sub) in[e] = 1;
  for (Elem g : t.generators())
    for (Elem e : sub)
      if (!in[t.conj(e, g)]) return false;
  return true;
}

std::vector<Elem> derived_subgroup(const ElementTable& t) {
  return normal_closure_impl(t, commutator_gens(t, t.generators()), t.generators());
}

std::vector<std::uint64_t> derived_orders(const ElementTable& t) {
  std::vector<std::uint64_t> out{t.size()};
  std::vector<Elem> gens = t.generators();
  for (;;) {
    auto next = normal_closure_impl(t, commutator_gens(t, gens), gens);
    if (next.size() == out.back()) break;
    out.push_back(next.size());
    if (next.size() == 1) break;
    gens = subgroup_generators(t, next);
  }
  return out;
}

PermutationGroup quotient_by_normal(const ElementTable& t, const std::vector<Elem>& normal,
                                    const std::vector<std::string>& names) {
  if (!is_normal(t, normal)) throw InvalidArgument("subgroup is not normal");
  const std::size_t n = t.size();
  if (normal.empty() || n % normal.size() != 0) throw InvalidArgument("not a subgroup");
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(n, unset);
  std::vector<Elem> rep;
  for (Elem e = 0; e < n; ++e) {
    if (coset[e] != unset) continue;
    auto id = static_cast<std::uint32_t>(rep.size());
    rep.push_back(e);
    for (Elem m : normal) coset[t.mul(m, e)] = id;
  }
  const std::size_t k = rep.size();
  std::vector<Permutation> gens;
  for (Elem g : t.generators()) {
    std::vector<Point> img(k);
    for (std::size_t c = 0; c < k; ++c) img[c] = coset[t.mul(rep[c], g)];
    gens.push_back(Permutation(std::move(img)));
  }
  std::vector<std::string> nm = names;
  if (nm.size() != gens.size()) nm = default_names(gens.size());
  return PermutationGroup(k, std::move(gens), std::move(nm));
}

std::string Fingerprint::label() const {
  std::ostringstream s;
  s << '[' << order << "](" << ncl << ',' << center_order << ')';
  return s.str();
}

Fingerprint fingerprint(const ElementTable& t) {
  Fingerprint f;
  f.order = t.size();
  f.ncl = conjugacy_classes(t).size();
  f.center_order = center(t).size();
  for (Elem e = 0; e < t.size(); ++e) ++f.order_histogram[t.order_of(e)];
  f.derived_orders = derived_orders(t);
  return f;
}

}  // namespace fgt
