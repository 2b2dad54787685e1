#include "fgt/aut.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "fgt/error.hpp"

namespace fgt {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    r.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) r.push_back(n);
  return r;
}

struct ElementData {
  std::vector<std::uint64_t> class_size;
  std::vector<std::uint64_t> roots;
};

template <class It>
std::uint64_t mix(It first, It last, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (; first != last; ++first) {
    std::uint64_t v = *first;
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

ElementData element_data(const ElementTable& t) {
  ElementData d;
  const std::size_t n = t.size();
  d.class_size.assign(n, 0);
  d.roots.assign(n, 0);
  for (const auto& c : conjugacy_classes(t))
    for (Elem e : c.members) d.class_size[e] = c.members.size();
  for (Elem x = 0; x < n; ++x) ++d.roots[t.mul(x, x)];
  return d;
}

// Positions follow a breadth-first walk of G built one generator at a time;
// level m adds the elements of <g_0..g_m> missing from <g_0..g_{m-1}>.
struct Plan {
  struct Op {
    std::uint32_t src, gen, dst;
    bool define;
  };
  std::vector<Elem> gens;
  std::vector<Elem> at;             // position -> element
  std::vector<std::uint32_t> pos;   // element -> position
  std::vector<std::size_t> level_end;
  std::vector<std::vector<Op>> ops;
};

// Each level walks <g_0..g_m> breadth-first from the identity so that short
// relators involving g_m are checked after few steps.
Plan make_plan(const ElementTable& t, const std::vector<Elem>& gens) {
  Plan p;
  p.gens = gens;
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  p.pos.assign(t.size(), unset);
  p.at.push_back(0);
  p.pos[0] = 0;
  std::vector<std::uint32_t> seen(t.size(), 0);
  for (std::size_t m = 0; m < gens.size(); ++m) {
    const std::size_t old_end = p.at.size();
    std::vector<Plan::Op> ops;
    std::vector<Elem> queue{0};
    const auto stamp = static_cast<std::uint32_t>(m + 1);
    seen[0] = stamp;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem e = queue[q];
      const bool old = p.pos[e] < old_end;
      for (std::size_t j = 0; j <= m; ++j) {
        const Elem target = t.mul(e, gens[j]);
        if (!(old && j < m)) {
          auto src = p.pos[e];
          auto g = static_cast<std::uint32_t>(j);
          if (p.pos[target] == unset) {
            p.pos[target] = static_cast<std::uint32_t>(p.at.size());
            ops.push_back({src, g, p.pos[target], true});
            p.at.push_back(target);
          } else {
            ops.push_back({src, g, p.pos[target], false});
          }
        }
        if (seen[target] != stamp) {
          seen[target] = stamp;
          queue.push_back(target);
        }
      }
    }
    p.level_end.push_back(p.at.size());
    p.ops.push_back(std::move(ops));
  }
  if (p.at.size() != t.size()) throw InvalidArgument("search generators do not generate the group");
  return p;
}

// Extends a partial map position -> target element level by level.
struct Extender {
  const Plan& plan;
  const ElementTable& target;
  const std::vector<std::vector<Elem>>& candidates;
  const std::vector<std::uint32_t>& target_ids;
  // For level m and j < m: invariant ids of g_j*g_m and g_j^-1*g_m.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pair_ids;
  std::vector<Elem> phi;
  std::vector<std::uint32_t> owner;  // target element -> position + 1
  std::vector<Elem> img;

  Extender(const Plan& pl, const ElementTable& source, const ElementTable& tg,
           const std::vector<std::vector<Elem>>& cand, const std::vector<std::uint32_t>& source_ids,
           const std::vector<std::uint32_t>& tgt_ids)
      : plan(pl), target(tg), candidates(cand), target_ids(tgt_ids) {
    phi.assign(plan.at.size(), 0);
    owner.assign(target.size(), 0);
    img.assign(plan.gens.size(), 0);
    phi[0] = 0;
    owner[0] = 1;
    const auto& g = plan.gens;
    pair_ids.resize(g.size());
    for (std::size_t m = 0; m < g.size(); ++m)
      for (std::size_t j = 0; j < m; ++j)
        pair_ids[m].push_back({source_ids[source.mul(g[j], g[m])],
                               source_ids[source.mul(source.inv(g[j]), g[m])]});
  }

  bool run_level(std::size_t m) {
    for (const auto& op : plan.ops[m]) {
      Elem v = target.mul(phi[op.src], img[op.gen]);
      if (op.define) {
        std::uint32_t o = owner[v];
        if (o && o - 1 < op.dst && phi[o - 1] == v) return false;
        phi[op.dst] = v;
        owner[v] = op.dst + 1;
      } else if (phi[op.dst] != v) {
        return false;
      }
    }
    return true;
  }

  bool try_candidate(std::size_t m, Elem c) {
    img[m] = c;
    for (std::size_t j = 0; j < m; ++j) {
      if (target_ids[target.mul(img[j], c)] != pair_ids[m][j].first) return false;
      if (target_ids[target.mul(target.inv(img[j]), c)] != pair_ids[m][j].second) return false;
    }
    return run_level(m);
  }

  bool extend(std::size_t m) {
    if (m == plan.gens.size()) return true;
    for (Elem c : candidates[m])
      if (try_candidate(m, c) && extend(m + 1)) return true;
    return false;
  }

  // Identity on <g_0..g_{i-1}>.
  void fix_prefix(std::size_t i) {
    std::size_t end = i == 0 ? 1 : plan.level_end[i - 1];
    for (std::size_t q = 0; q < end; ++q) {
      phi[q] = plan.at[q];
      owner[plan.at[q]] = static_cast<std::uint32_t>(q + 1);
    }
    for (std::size_t j = 0; j < i; ++j) img[j] = plan.gens[j];
  }

  Permutation element_permutation(const ElementTable& source) const {
    std::vector<Point> r(source.size());
    for (std::size_t q = 0; q < plan.at.size(); ++q) r[plan.at[q]] = phi[q];
    return Permutation::unchecked(std::move(r));
  }
};

// Dense ids for invariant keys, shared between two groups.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> invariant_ids(
    const std::vector<std::vector<std::uint64_t>>& a, const std::vector<std::vector<std::uint64_t>>& b) {
  std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
  auto assign = [&](const std::vector<std::vector<std::uint64_t>>& keys) {
    std::vector<std::uint32_t> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(ids.emplace(k, static_cast<std::uint32_t>(ids.size())).first->second);
    return out;
  };
  auto x = assign(a);
  auto y = assign(b);
  return {std::move(x), std::move(y)};
}

std::vector<Elem> orbit_of(Elem start, const std::vector<Permutation>& gens, std::vector<char>& mark) {
  std::vector<Elem> orb;
  if (mark[start]) return orb;
  mark[start] = 1;
  orb.push_back(start);
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens) {
      Elem y = g[orb[k]];
      if (!mark[y]) {
        mark[y] = 1;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Elem>> candidate_lists(const std::vector<std::vector<std::uint64_t>>& src_inv,
                                               const std::vector<Elem>& gens,
                                               const std::vector<std::vector<std::uint64_t>>& tgt_inv) {
  std::vector<std::vector<Elem>> out(gens.size());
  for (std::size_t m = 0; m < gens.size(); ++m)
    for (Elem e = 0; e < tgt_inv.size(); ++e)
      if (tgt_inv[e] == src_inv[gens[m]]) out[m].push_back(e);
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> element_invariants(const ElementTable& t) {
  ElementData d = element_data(t);
  const std::size_t n = t.size();
  std::vector<std::vector<std::uint64_t>> out(n);
  std::vector<std::uint64_t> color(n);
  for (Elem x = 0; x < n; ++x) {
    auto& k = out[x];
    std::uint64_t ord = t.order_of(x);
    k = {ord, d.class_size[x], d.roots[x]};
    for (std::uint64_t r : prime_divisors(ord)) {
      Elem y = t.pow(x, static_cast<std::int64_t>(r));
      k.push_back(d.class_size[y]);
      k.push_back(d.roots[y]);
    }
    color[x] = mix(k.begin(), k.end(), 0);
  }
  // Refinement: colour of x joined with the colours of x*s over the smallest
  // colour classes s. The chosen classes are Aut-invariant, so the result is.
  const std::size_t budget = std::max<std::size_t>(1, 20000000 / std::max<std::size_t>(n, 1));
  std::size_t distinct = 0;
  for (int round = 0; round < 3; ++round) {
    std::map<std::uint64_t, std::vector<Elem>> classes;
    for (Elem x = 1; x < n; ++x) classes[color[x]].push_back(x);
    if (classes.size() == distinct) break;
    distinct = classes.size();
    std::vector<std::pair<std::size_t, std::uint64_t>> order;
    for (const auto& [c, members] : classes) order.push_back({members.size(), c});
    std::sort(order.begin(), order.end());
    std::vector<Elem> probe;
    for (const auto& [size, c] : order) {
      if (!probe.empty() && probe.size() + size > budget) break;
      const auto& m = classes[c];
      probe.insert(probe.end(), m.begin(), m.end());
    }
    std::vector<std::uint64_t> next(n);
    std::vector<std::uint64_t> buf;
    for (Elem x = 0; x < n; ++x) {
      buf.clear();
      for (Elem s : probe) buf.push_back(color[t.mul(x, s)]);
      std::sort(buf.begin(), buf.end());
      next[x] = mix(buf.begin(), buf.end(), color[x]);
    }
    color = std::move(next);
  }
  for (Elem x = 0; x < n; ++x) out[x].push_back(color[x]);
  return out;
}

std::vector<Elem> search_generators(const ElementTable& t) {
  const std::size_t n = t.size();
  if (n == 1) return {};
  auto inv = element_invariants(t);
  std::map<std::vector<std::uint64_t>, std::size_t> freq;
  for (const auto& k : inv) ++freq[k];
  std::vector<Elem> reps;
  for (const auto& c : conjugacy_classes(t))
    if (c.rep != 0) reps.push_back(c.rep);
  std::vector<Elem> gens;
  std::vector<Elem> sub{0};
  while (sub.size() < n) {
    std::vector<char> in(n, 0);
    for (Elem e : sub) in[e] = 1;
    auto pick = [&](const std::vector<Elem>& pool) {
      Elem best = ElementTable::npos;
      std::size_t best_size = sub.size(), best_freq = 0;
      for (Elem x : pool) {
        if (in[x]) continue;
        auto trial = gens;
        trial.push_back(x);
        std::size_t s = subgroup_closure(t, trial).size();
        std::size_t f = freq[inv[x]];
        if (s > best_size || (s == best_size && best != ElementTable::npos && f < best_freq)) {
          best = x;
          best_size = s;
          best_freq = f;
        }
      }
      return best;
    };
    Elem x = pick(reps);
    if (x == ElementTable::npos) {
      std::vector<Elem> all(n);
      std::iota(all.begin(), all.end(), Elem{0});
      x = pick(all);
    }
    gens.push_back(x);
    sub = subgroup_closure(t, gens);
  }
  for (std::size_t j = gens.size(); j-- > 0;) {
    auto trial = gens;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j));
    if (subgroup_closure(t, trial).size() == n) gens = trial;
  }
  return gens;
}

PermutationGroup reduce_aut_degree(const ElementTable& t, const std::vector<Permutation>& auts,
                                   std::vector<Elem>* points) {
  const std::size_t n = t.size();
  std::vector<char> mark(n, 0);
  mark[0] = 1;
  std::vector<std::vector<Elem>> orbits;
  for (Elem e = 1; e < n; ++e) {
    auto o = orbit_of(e, auts, mark);
    if (!o.empty()) orbits.push_back(std::move(o));
  }
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  auto generated = [&](const std::vector<std::size_t>& pick) {
    std::vector<Elem> gens;
    for (std::size_t i : pick) {
      auto trial = gens;
      trial.insert(trial.end(), orbits[i].begin(), orbits[i].end());
      gens = subgroup_generators(t, subgroup_closure(t, trial));
    }
    return subgroup_closure(t, gens).size();
  };
  // Greedy by increasing orbit size, then drop orbits that became redundant.
  std::vector<std::size_t> pick;
  std::vector<Elem> sub_gens;
  std::size_t covered = 1;
  for (std::size_t i = 0; i < orbits.size() && covered < n; ++i) {
    auto trial = sub_gens;
    trial.insert(trial.end(), orbits[i].begin(), orbits[i].end());
    auto sub = subgroup_closure(t, trial);
    if (sub.size() > covered) {
      covered = sub.size();
      sub_gens = subgroup_generators(t, sub);
      pick.push_back(i);
    }
  }
  for (std::size_t j = pick.size(); j-- > 0;) {
    auto trial = pick;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j));
    if (generated(trial) == n) pick = trial;
  }
  std::size_t total = 0;
  for (std::size_t i : pick) total += orbits[i].size();
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].size() < total && generated({i}) == n) {
      pick = {i};
      break;
    }
  std::vector<Elem> chosen, pool;
  for (std::size_t i : pick) pool.insert(pool.end(), orbits[i].begin(), orbits[i].end());
  if (n == 1) pool = {0};
  chosen = pool;
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::uint32_t> idx(n, static_cast<std::uint32_t>(-1));
  for (std::size_t i = 0; i < chosen.size(); ++i) idx[chosen[i]] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> gens;
  for (const auto& a : auts) {
    std::vector<Point> r(chosen.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) r[i] = idx[a[chosen[i]]];
    Permutation p = Permutation::unchecked(std::move(r));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  if (points) *points = chosen;
  return PermutationGroup(chosen.size(), std::move(gens));
}

AutGroupResult automorphism_group(const ElementTable& t, const std::vector<Elem>& given,
                                  const AutOptions& opts) {
  AutGroupResult res;
  const std::size_t n = t.size();
  std::vector<Elem> gens = given.empty() ? search_generators(t) : given;
  if (!given.empty() && subgroup_closure(t, gens).size() != n)
    throw InvalidArgument("given elements do not generate the group");
  res.search_gens = gens;
  res.center_order = center(t).size();
  res.inner_order = n / res.center_order;

  const std::size_t k = gens.size();
  std::vector<Permutation> found;
  std::vector<std::vector<Permutation>> level_gens(k);
  std::vector<std::uint64_t> orbit_sizes(k, 1);
  if (k > 0) {
    Plan plan = make_plan(t, gens);
    auto inv = element_invariants(t);
    auto cand = candidate_lists(inv, gens, inv);
    auto ids = invariant_ids(inv, {});
    Extender ex(plan, t, t, cand, ids.first, ids.first);
    for (std::size_t i = k; i-- > 0;) {
      ex.fix_prefix(i);
      std::vector<char> in_orbit(n, 0), failed(n, 0);
      auto orbit = orbit_of(gens[i], found, in_orbit);
      for (Elem c : cand[i]) {
        if (in_orbit[c] || failed[c]) continue;
        if (ex.try_candidate(i, c) && ex.extend(i + 1)) {
          Permutation a = ex.element_permutation(t);
          Automorphism aut;
          for (Elem g : gens) aut.generator_images.push_back(a[g]);
          aut.element_permutation = a;
          res.generators.push_back(std::move(aut));
          found.push_back(std::move(a));
          std::fill(in_orbit.begin(), in_orbit.end(), 0);
          orbit = orbit_of(gens[i], found, in_orbit);
        } else {
          orbit_of(c, found, failed);
        }
      }
      orbit_sizes[i] = orbit.size();
      level_gens[i] = found;
    }
  }
  std::reverse(res.generators.begin(), res.generators.end());
  res.orbit_sizes = orbit_sizes;
  res.order = 1;
  for (auto s : orbit_sizes) res.order *= s;

  std::vector<Point> base(gens.begin(), gens.end());
  auto chain = std::make_shared<StabChain>(std::max<std::size_t>(n, 1), base, level_gens);
  std::vector<Permutation> all = found;
  std::reverse(all.begin(), all.end());
  if (all.empty()) all.push_back(Permutation(std::max<std::size_t>(n, 1)));
  res.group = PermutationGroup(std::max<std::size_t>(n, 1), all);
  res.group.adopt_chain(chain);
  if (opts.reduce || opts.compute_fingerprint) res.reduced = reduce_aut_degree(t, found, &res.reduced_points);
  res.complete = res.center_order == 1 && res.order == n;
  if (opts.compute_fingerprint && res.order <= opts.fingerprint_cap)
    res.fingerprint = fingerprint(ElementTable::of(res.reduced, opts.fingerprint_cap));
  return res;
}

std::optional<IsoCertificate> is_isomorphic(const ElementTable& g, const ElementTable& h) {
  if (g.size() != h.size()) return std::nullopt;
  if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;
  IsoCertificate cert;
  cert.source_gens = search_generators(g);
  if (cert.source_gens.empty()) return cert;
  auto ginv = element_invariants(g);
  auto hinv = element_invariants(h);
  {
    auto a = ginv, b = hinv;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  Plan plan = make_plan(g, cert.source_gens);
  auto cand = candidate_lists(ginv, cert.source_gens, hinv);
  auto ids = invariant_ids(ginv, hinv);
  Extender ex(plan, g, h, cand, ids.first, ids.second);
  if (!ex.extend(0)) return std::nullopt;
  cert.images = ex.img;
  return cert;
}

bool is_complete(const ElementTable& t) {
  if (center(t).size() != 1) return false;
  AutOptions o;
  o.compute_fingerprint = false;
  return automorphism_group(t, {}, o).order == t.size();
}

PermutationGroup inner_automorphisms(const ElementTable& t) {
  std::vector<Permutation> gens;
  for (Elem g : t.generators()) {
    std::vector<Point> r(t.size());
    for (Elem x = 0; x < t.size(); ++x) r[x] = t.conj(x, g);
    Permutation p = Permutation::unchecked(std::move(r));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Permutation(std::max<std::size_t>(t.size(), 1)));
  return PermutationGroup(std::max<std::size_t>(t.size(), 1), std::move(gens));
}

std::optional<std::vector<Elem>> find_epimorphism(const Presentation& pres, const ElementTable& t) {
  const std::size_t k = pres.alphabet.size();
  // Relators are checked as soon as their last generator has an image.
  std::vector<std::vector<const Word*>> due(k);
  std::vector<std::uint64_t> order_bound(k, 0);
  for (const auto& w : pres.relators) {
    if (w.empty()) continue;
    std::uint32_t last = 0;
    for (const auto& l : w.letters()) last = std::max(last, l.gen);
    due[last].push_back(&w);
    if (w.letters().size() == 1) {
      auto e = static_cast<std::uint64_t>(w.letters()[0].exp < 0 ? -w.letters()[0].exp : w.letters()[0].exp);
      auto& b = order_bound[w.letters()[0].gen];
      b = b == 0 ? e : std::gcd(b, e);
    }
  }
  if (k == 0) {
    if (t.size() == 1) return std::vector<Elem>{};
    return std::nullopt;
  }
  std::vector<std::vector<Elem>> cand(k);
  std::vector<Elem> by_order(t.size());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return t.order_of(a) > t.order_of(b); });
  std::vector<char> is_rep(t.size(), 0);
  for (const auto& c : conjugacy_classes(t)) is_rep[c.rep] = 1;
  for (std::size_t j = 0; j < k; ++j)
    for (Elem e : by_order) {
      if (order_bound[j] && order_bound[j] % t.order_of(e)) continue;
      if (j == 0 && !is_rep[e]) continue;
      cand[j].push_back(e);
    }
  std::vector<Elem> img(k, 0);
  std::optional<std::vector<Elem>> result;
  auto dfs = [&](auto&& self, std::size_t j) -> bool {
    if (j == k) {
      if (subgroup_closure(t, img).size() != t.size()) return false;
      result = img;
      return true;
    }
    for (Elem c : cand[j]) {
      img[j] = c;
      bool ok = true;
      for (const Word* w : due[j])
        if (evaluate_word(*w, t, img) != 0) {
          ok = false;
          break;
        }
      if (ok && self(self, j + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return result;
}

bool validate_presentation(const Presentation& pres, const PermutationGroup& g, std::size_t cap) {
  ElementTable t = ElementTable::of(g, cap);
  CosetTable ct = todd_coxeter(pres, {}, std::max<std::size_t>(kDefaultMaxCosets, 4 * t.size()));
  if (ct.index != t.size()) return false;
  return find_epimorphism(pres, t).has_value();
}

}  // namespace fgt

namespace fgt {

Tower aut_tower(const PermutationGroup& g, std::size_t max_steps, std::uint64_t max_order) {
  Tower tower;
  PermutationGroup current = g;
  for (std::size_t step = 0;; ++step) {
    auto t0 = std::chrono::steady_clock::now();
    if (current.order() > max_order) {
      tower.truncated = true;
      tower.stop_reason = "order " + std::to_string(current.order()) + " exceeds max order";
      return tower;
    }
    ElementTable t = ElementTable::of(current, static_cast<std::size_t>(max_order));
    TowerStep st;
    st.fingerprint = fingerprint(t);
    st.center_order = st.fingerprint.center_order;
    if (step == max_steps) {
      st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      tower.steps.push_back(st);
      tower.truncated = true;
      tower.stop_reason = "max steps reached";
      return tower;
    }
    AutOptions o;
    o.compute_fingerprint = false;
    AutGroupResult r = automorphism_group(t, {}, o);
    st.complete = r.complete;
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    tower.steps.push_back(st);
    if (r.complete) {
      tower.terminated = true;
      tower.stop_reason = "complete group";
      return tower;
    }
    if (r.order > max_order) {
      tower.truncated = true;
      tower.stop_reason = "next group order " + std::to_string(r.order) + " exceeds max order";
      return tower;
    }
    current = r.reduced;
  }
}

}  // namespace fgt
