#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgt/perm_group.hpp"

namespace fgt {

// n x n matrix over GF(p), entries reduced to [0, p). Vectors are rows and
// act on the right (v -> v*M), so products follow the permutation convention.
class MatGF {
 public:
  MatGF() = default;
  MatGF(std::int64_t p, std::size_t n);  // zero matrix
  MatGF(std::int64_t p, std::vector<std::vector<std::int64_t>> rows);
  static MatGF identity(std::int64_t p, std::size_t n);
  static MatGF scalar(std::int64_t p, std::size_t n, std::int64_t s);
  static MatGF diagonal(std::int64_t p, const std::vector<std::int64_t>& d);

  std::int64_t p() const { return p_; }
  std::size_t n() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v);

  std::int64_t det() const;
  bool invertible() const { return det() != 0; }
  MatGF inverse() const;
  bool is_identity() const;
  // "[[a,b],[c,d]]"
  std::string str() const;

  friend MatGF operator*(const MatGF& a, const MatGF& b);
  friend bool operator==(const MatGF&, const MatGF&) = default;
  friend auto operator<=>(const MatGF&, const MatGF&) = default;

 private:
  std::int64_t p_ = 2;
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

MatGF mat_pow(const MatGF& m, std::int64_t e);
std::uint64_t matrix_order(const MatGF& m);
// Block-diagonal sum.
MatGF direct_sum(const MatGF& a, const MatGF& b);
// Parses "[[1,2],[3,4]]@7"; the "@p" suffix is optional when p is given.
MatGF parse_matrix(const std::string& text, std::int64_t p = 0);

struct MatrixGroup {
  std::int64_t p = 3;
  std::size_t n = 1;
  std::vector<MatGF> generators;
};

// Index of a row vector in [0, p^n): coordinates in base p, first coordinate
// most significant.
std::size_t vector_index(const std::vector<std::int64_t>& v, std::int64_t p);
std::vector<std::int64_t> index_vector(std::size_t idx, std::int64_t p, std::size_t n);

// Permutation of the p^n vectors induced by v -> v*M.
Permutation matrix_to_perm(const MatGF& m);
PermutationGroup matrix_group_to_perm(const MatrixGroup& g);

std::uint64_t gl_order(unsigned n, std::uint64_t p);

}  // namespace fgt
