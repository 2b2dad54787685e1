#include "fgt/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fgt/error.hpp"

namespace fgt {

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(std::size_t degree, const std::vector<Permutation>& gens)
    : degree_(degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  }
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    std::uint32_t slot = store(g);
    // Extend the base until g moves some base point.
    bool moves = false;
    for (const auto& lv : levels_)
      if (g[lv.base] != lv.base) moves = true;
    if (!moves) {
      Point b = 0;
      while (g[b] == b) ++b;
      Level lv;
      lv.base = b;
      levels_.push_back(std::move(lv));
    }
    // g lies in the stabilizer of every base point before the first it moves.
    for (auto& lv : levels_) {
      lv.gens.push_back(slot);
      if (g[lv.base] != lv.base) break;
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
  schreier_sims();
}

StabChain::StabChain(std::size_t degree, std::vector<Point> base,
                     const std::vector<std::vector<Permutation>>& level_gens)
    : degree_(degree) {
  if (base.size() != level_gens.size()) throw InvalidArgument("base/generator mismatch");
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level lv;
    lv.base = base[i];
    levels_.push_back(std::move(lv));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (const auto& g : level_gens[i]) {
      if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
      levels_[i].gens.push_back(store(g));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
}

std::uint32_t StabChain::store(const Permutation& g) {
  store_.push_back(g);
  store_inv_.push_back(g.inverse());
  return static_cast<std::uint32_t>(store_.size() - 1);
}

void StabChain::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.tree.assign(degree_, -1);
  lv.orbit.clear();
  lv.tree[lv.base] = -2;
  lv.orbit.push_back(lv.base);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    Point pt = lv.orbit[k];
    for (std::size_t j = 0; j < lv.gens.size(); ++j) {
      Point img = store_[lv.gens[j]][pt];
      if (lv.tree[img] == -1) {
        lv.tree[img] = static_cast<std::int32_t>(j);
        lv.orbit.push_back(img);
      }
    }
  }
}

std::size_t StabChain::strip(std::vector<Point>& g, std::size_t from) const {
  std::vector<Point> tmp(degree_);
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point beta = g[lv.base];
    if (lv.tree[beta] == -1) return l;
    while (beta != lv.base) {
      const Permutation& ginv = store_inv_[lv.gens[static_cast<std::size_t>(lv.tree[beta])]];
      for (std::size_t i = 0; i < degree_; ++i) tmp[i] = ginv[g[i]];
      g.swap(tmp);
      beta = g[lv.base];
    }
  }
  return levels_.size();
}

Permutation StabChain::transversal(std::size_t level, Point pt) const {
  const Level& lv = levels_[level];
  if (lv.tree[pt] == -1) throw InvalidArgument("point outside orbit");
  std::vector<std::uint32_t> path;
  Point beta = pt;
  while (beta != lv.base) {
    std::uint32_t slot = lv.gens[static_cast<std::size_t>(lv.tree[beta])];
    path.push_back(slot);
    beta = store_inv_[slot][beta];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = compose(u, store_[*it]);
  return u;
}

void StabChain::schreier_sims() {
  if (levels_.empty()) return;
  std::size_t i = levels_.size();
  std::vector<Point> s(degree_);
  while (i-- > 0) {
  restart:
    bool grew = false;
    const std::size_t norbit = levels_[i].orbit.size();
    for (std::size_t k = 0; k < norbit && !grew; ++k) {
      Point b = levels_[i].orbit[k];
      Permutation ub = transversal(i, b);
      for (std::size_t j = 0; j < levels_[i].gens.size(); ++j) {
        const Permutation& x = store_[levels_[i].gens[j]];
        for (std::size_t t = 0; t < degree_; ++t) s[t] = x[ub[t]];
        std::size_t stop = strip(s, i);
        bool trivial = stop == levels_.size();
        if (trivial) {
          for (std::size_t t = 0; t < degree_; ++t)
            if (s[t] != t) {
              trivial = false;
              break;
            }
        }
        if (trivial) continue;
        // A new strong generator: extend the chain below level i.
        Permutation h = Permutation::unchecked(s);
        std::uint32_t slot = store(h);
        if (stop == levels_.size()) {
          Point nb = 0;
          while (h[nb] == nb) ++nb;
          Level lv;
          lv.base = nb;
          levels_.push_back(std::move(lv));
        }
        for (std::size_t l = i + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(slot);
          rebuild_orbit(l);
        }
        i = stop;
        grew = true;
        break;
      }
    }
    if (grew) goto restart;
  }
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) n *= lv.orbit.size();
  return n;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  std::vector<Point> v = g.images();
  if (strip(v, 0) != levels_.size()) return false;
  for (std::size_t t = 0; t < degree_; ++t)
    if (v[t] != t) return false;
  return true;
}

std::vector<Permutation> StabChain::strong_generators() const {
  std::vector<char> used(store_.size(), 0);
  std::vector<Permutation> out;
  for (const auto& lv : levels_)
    for (auto slot : lv.gens)
      if (!used[slot]) {
        used[slot] = 1;
        out.push_back(store_[slot]);
      }
  return out;
}

// ---------------------------------------------------------------------------
// PermutationGroup

std::vector<std::string> default_names(std::size_t n) {
  static const char* letters = "abcdefghkmnrstuvwz";
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < 18)
      out.emplace_back(1, letters[i]);
    else
      out.push_back("g" + std::to_string(i + 1));
  }
  return out;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> gens,
                                   std::vector<std::string> names)
    : degree_(degree), gens_(std::move(gens)), names_(std::move(names)) {
  if (degree == 0) throw InvalidArgument("group degree must be positive");
  for (const auto& g : gens_)
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  if (names_.empty()) names_ = default_names(gens_.size());
  if (names_.size() != gens_.size()) throw InvalidArgument("one name per generator required");
}

void PermutationGroup::set_names(std::vector<std::string> names) {
  if (names.size() != gens_.size()) throw InvalidArgument("one name per generator required");
  names_ = std::move(names);
}

const StabChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    if (!cache_->chain) cache_->chain = std::make_shared<StabChain>(degree_, gens_);
  });
  return *cache_->chain;
}

bool PermutationGroup::has_chain() const { return static_cast<bool>(cache_->chain); }

void PermutationGroup::adopt_chain(std::shared_ptr<const StabChain> chain) {
  cache_ = std::make_shared<Cache>();
  cache_->chain = std::move(chain);
}

PermutationGroup stabilizer_chain(const PermutationGroup& g) {
  g.chain();
  return g;
}

std::size_t default_element_cap() {
  if (const char* env = std::getenv("FGT_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

// ---------------------------------------------------------------------------
// ElementTable

std::size_t ElementTable::hash_key(const Point* key) const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < base_.size(); ++i) h = (h ^ key[i]) * 1099511628211ull;
  return h ^ (h >> 29);
}

Elem ElementTable::lookup(const Point* key) const {
  const std::size_t nb = base_.size();
  std::size_t pos = hash_key(key) & mask_;
  for (;;) {
    Elem e = slots_[pos];
    if (e == npos) return npos;
    if (std::equal(key, key + nb, keys_.data() + static_cast<std::size_t>(e) * nb)) return e;
    pos = (pos + 1) & mask_;
  }
}

void ElementTable::insert(Elem idx) {
  std::size_t pos = hash_key(keys_.data() + static_cast<std::size_t>(idx) * base_.size()) & mask_;
  while (slots_[pos] != npos) pos = (pos + 1) & mask_;
  slots_[pos] = idx;
}

ElementTable ElementTable::of(const PermutationGroup& g, std::size_t cap) {
  std::vector<Permutation> gens = g.generators();
  if (gens.empty()) gens.push_back(Permutation(g.degree()));
  const StabChain& ch = g.chain();
  if (ch.order() > cap)
    throw CapExceeded("group of order " + std::to_string(ch.order()) +
                      " exceeds element cap " + std::to_string(cap));
  ElementTable t;
  t.degree_ = g.degree();
  t.base_ = ch.base();
  if (t.base_.empty()) t.base_.push_back(0);
  const std::size_t n = ch.order();
  const std::size_t d = t.degree_;
  const std::size_t nb = t.base_.size();
  std::size_t cap2 = 1;
  while (cap2 < 2 * n + 2) cap2 <<= 1;
  t.slots_.assign(cap2, npos);
  t.mask_ = cap2 - 1;
  t.data_.reserve(n * d);
  t.keys_.reserve(n * nb);
  // identity
  for (std::size_t i = 0; i < d; ++i) t.data_.push_back(static_cast<Point>(i));
  for (Point b : t.base_) t.keys_.push_back(b);
  t.size_ = 1;
  t.insert(0);
  t.cols_.assign(gens.size(), std::vector<Elem>(n, npos));
  std::vector<Point> key(nb);
  for (std::size_t e = 0; e < t.size_; ++e) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& gi = gens[j].images();
      const Point* ek = t.keys_.data() + e * nb;
      for (std::size_t k = 0; k < nb; ++k) key[k] = gi[ek[k]];
      Elem found = t.lookup(key.data());
      if (found == npos) {
        if (t.size_ >= n) throw Error("closure exceeded chain order; inconsistent chain");
        const Point* ed = t.data_.data() + e * d;
        for (std::size_t i = 0; i < d; ++i) t.data_.push_back(gi[ed[i]]);
        for (std::size_t k = 0; k < nb; ++k) t.keys_.push_back(key[k]);
        found = static_cast<Elem>(t.size_++);
        t.insert(found);
      }
      t.cols_[j][e] = found;
    }
  }
  if (t.size_ != n) throw Error("closure size disagrees with chain order");
  for (const auto& g2 : gens) t.gen_elems_.push_back(t.find(g2));
  // inverses and orders
  t.inv_.assign(n, 0);
  t.orders_.assign(n, 1);
  std::vector<Point> inv(d);
  for (std::size_t e = 0; e < n; ++e) {
    const Point* ed = t.data_.data() + e * d;
    for (std::size_t i = 0; i < d; ++i) inv[ed[i]] = static_cast<Point>(i);
    for (std::size_t k = 0; k < nb; ++k) key[k] = inv[t.base_[k]];
    t.inv_[e] = t.lookup(key.data());
    t.orders_[e] = static_cast<std::uint32_t>(
        Permutation::unchecked(std::vector<Point>(ed, ed + d)).order());
  }
  return t;
}

ElementTable ElementTable::closure(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) throw InvalidArgument("closure needs at least one generator");
  return of(PermutationGroup(gens.front().degree(), gens), cap);
}

Permutation ElementTable::element(Elem i) const {
  auto s = images(i);
  return Permutation::unchecked(std::vector<Point>(s.begin(), s.end()));
}

Elem ElementTable::mul(Elem a, Elem b) const {
  const std::size_t nb = base_.size();
  Point key[64]{};
  std::vector<Point> big;
  Point* k = key;
  if (nb > 64) {
    big.resize(nb);
    k = big.data();
  }
  const Point* ak = keys_.data() + static_cast<std::size_t>(a) * nb;
  const Point* bd = data_.data() + static_cast<std::size_t>(b) * degree_;
  for (std::size_t i = 0; i < nb; ++i) k[i] = bd[ak[i]];
  return lookup(k);
}

Elem ElementTable::pow(Elem a, std::int64_t e) const {
  std::int64_t ord = orders_[a];
  e %= ord;
  if (e < 0) e += ord;
  Elem result = 0, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem ElementTable::find_images(std::span<const Point> images) const {
  if (images.size() != degree_) return npos;
  const std::size_t nb = base_.size();
  std::vector<Point> key(nb);
  for (std::size_t i = 0; i < nb; ++i) key[i] = images[base_[i]];
  Elem e = lookup(key.data());
  if (e == npos) return npos;
  auto s = this->images(e);
  return std::equal(s.begin(), s.end(), images.begin()) ? e : npos;
}

Elem ElementTable::find(const Permutation& g) const {
  return find_images(std::span<const Point>(g.images().data(), g.images().size()));
}

std::vector<Permutation> ElementTable::generator_perms() const {
  std::vector<Permutation> out;
  for (Elem e : gen_elems_) out.push_back(element(e));
  return out;
}

}  // namespace fgt
