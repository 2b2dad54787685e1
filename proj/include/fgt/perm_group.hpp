#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "fgt/perm.hpp"

namespace fgt {

using Elem = std::uint32_t;

// Base and strong generating set built by deterministic Schreier-Sims.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> gens;  // slots into the generator store
    std::vector<std::int32_t> tree;   // -1 outside orbit, -2 base, else gens index
    std::vector<Point> orbit;
  };

  StabChain(std::size_t degree, const std::vector<Permutation>& gens);
  // Chain over a prescribed base whose levels are already complete; used when
  // the caller knows each level's generators and orbit (automorphism search).
  StabChain(std::size_t degree, std::vector<Point> base,
            const std::vector<std::vector<Permutation>>& level_gens);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const;
  std::vector<Point> base() const;
  const std::vector<Level>& levels() const { return levels_; }
  bool contains(const Permutation& g) const;
  std::vector<Permutation> strong_generators() const;
  // Transversal element mapping the level's base point to pt.
  Permutation transversal(std::size_t level, Point pt) const;

 private:
  std::uint32_t store(const Permutation& g);
  void rebuild_orbit(std::size_t level);
  // Divides g by transversal elements from level `from`; returns the level
  // where sifting stopped (levels_.size() on full success).
  std::size_t strip(std::vector<Point>& g, std::size_t from) const;
  void schreier_sims();

  std::size_t degree_;
  std::vector<Permutation> store_;
  std::vector<Permutation> store_inv_;
  std::vector<Level> levels_;
};

class PermutationGroup {
 public:
  PermutationGroup() = default;
  PermutationGroup(std::size_t degree, std::vector<Permutation> gens,
                   std::vector<std::string> names = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  // One symbol per generator; defaults to a, b, c, ...
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);

  const StabChain& chain() const;
  bool has_chain() const;
  void adopt_chain(std::shared_ptr<const StabChain> chain);
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const StabChain> chain;
  };
  std::size_t degree_ = 1;
  std::vector<Permutation> gens_;
  std::vector<std::string> names_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

std::vector<std::string> default_names(std::size_t n);

PermutationGroup stabilizer_chain(const PermutationGroup& g);

std::size_t default_element_cap();

// All elements of a group, indexed by breadth-first discovery from the
// identity with generators in the given order. Element 0 is the identity.
class ElementTable {
 public:
  static constexpr Elem npos = static_cast<Elem>(-1);

  static ElementTable closure(const std::vector<Permutation>& gens,
                              std::size_t cap = default_element_cap());
  static ElementTable of(const PermutationGroup& g,
                         std::size_t cap = default_element_cap());

  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }
  std::span<const Point> images(Elem i) const {
    return {data_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation element(Elem i) const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inv_[a]; }
  Elem mul_gen(Elem a, std::size_t j) const { return cols_[j][a]; }
  Elem pow(Elem a, std::int64_t e) const;
  Elem conj(Elem x, Elem g) const { return mul(inv_[g], mul(x, g)); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  std::uint32_t order_of(Elem a) const { return orders_[a]; }
  Elem find(const Permutation& g) const;
  Elem find_images(std::span<const Point> images) const;

  const std::vector<Elem>& generators() const { return gen_elems_; }
  std::vector<Permutation> generator_perms() const;
  std::vector<std::uint32_t> element_orders() const { return orders_; }

 private:
  Elem lookup(const Point* key) const;
  void insert(Elem idx);
  std::size_t hash_key(const Point* key) const;

  std::size_t size_ = 0;
  std::size_t degree_ = 0;
  std::vector<Point> base_;
  std::vector<Point> data_;  // size_ * degree_
  std::vector<Point> keys_;  // base images, size_ * base_.size()
  std::vector<Elem> slots_;
  std::size_t mask_ = 0;
  std::vector<std::vector<Elem>> cols_;
  std::vector<Elem> gen_elems_;
  std::vector<Elem> inv_;
  std::vector<std::uint32_t> orders_;
};

}  // namespace fgt
