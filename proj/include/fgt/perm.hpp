#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fgt {

using Point = std::uint32_t;

// A permutation of {0..degree-1}. Products are applied left to right:
// (a * b)(i) = b(a(i)), so conjugation x^g = g^-1 * x * g.
class Permutation {
 public:
  Permutation() : images_{0} {}
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);
  // Skips the bijection check; callers guarantee validity.
  static Permutation unchecked(std::vector<Point> images);

  // Cycles use 0-based points unless one_based is set.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles,
                                 bool one_based = false);
  // Parses "(0 1 2)(3 4)" or "(1,2,3)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t degree,
                           bool one_based = false);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;
  std::string to_cycles(bool one_based = false) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}
Permutation power(const Permutation& a, std::int64_t e);
Permutation conjugate(const Permutation& x, const Permutation& g);
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fgt
