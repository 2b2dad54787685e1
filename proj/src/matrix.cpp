#include "fgt/matrix.hpp"

#include <cctype>
#include <sstream>

#include "fgt/error.hpp"
#include "fgt/modular.hpp"

namespace fgt {

MatGF::MatGF(std::int64_t p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {
  if (p < 2) throw InvalidArgument("modulus must be at least 2");
  if (n == 0) throw InvalidArgument("matrix dimension must be positive");
}

MatGF::MatGF(std::int64_t p, std::vector<std::vector<std::int64_t>> rows)
    : MatGF(p, rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw InvalidArgument("matrix must be square");
    for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = mod(rows[i][j], p_);
  }
}

MatGF MatGF::identity(std::int64_t p, std::size_t n) { return scalar(p, n, 1); }

MatGF MatGF::scalar(std::int64_t p, std::size_t n, std::int64_t s) {
  MatGF m(p, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = mod(s, p);
  return m;
}

MatGF MatGF::diagonal(std::int64_t p, const std::vector<std::int64_t>& d) {
  MatGF m(p, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = mod(d[i], p);
  return m;
}

void MatGF::set(std::size_t i, std::size_t j, std::int64_t v) { a_[i * n_ + j] = mod(v, p_); }

std::int64_t MatGF::det() const {
  std::vector<std::int64_t> m = a_;
  std::int64_t d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      d = mod(-d, p_);
    }
    std::int64_t pv = m[c * n_ + c];
    d = d * pv % p_;
    std::int64_t pinv = inv_mod(pv, p_);
    for (std::size_t r = c + 1; r < n_; ++r) {
      std::int64_t f = m[r * n_ + c] * pinv % p_;
      if (!f) continue;
      for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] = mod(m[r * n_ + j] - f * m[c * n_ + j], p_);
    }
  }
  return d;
}

MatGF MatGF::inverse() const {
  MatGF m = *this, r = identity(p_, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m.a_[piv * n_ + c] == 0) ++piv;
    if (piv == n_) throw InvalidArgument("singular matrix");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(m.a_[piv * n_ + j], m.a_[c * n_ + j]);
      std::swap(r.a_[piv * n_ + j], r.a_[c * n_ + j]);
    }
    std::int64_t pinv = inv_mod(m.a_[c * n_ + c], p_);
    for (std::size_t j = 0; j < n_; ++j) {
      m.a_[c * n_ + j] = m.a_[c * n_ + j] * pinv % p_;
      r.a_[c * n_ + j] = r.a_[c * n_ + j] * pinv % p_;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c) continue;
      std::int64_t f = m.a_[i * n_ + c];
      if (!f) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        m.a_[i * n_ + j] = mod(m.a_[i * n_ + j] - f * m.a_[c * n_ + j], p_);
        r.a_[i * n_ + j] = mod(r.a_[i * n_ + j] - f * r.a_[c * n_ + j], p_);
      }
    }
  }
  return r;
}

bool MatGF::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (a_[i * n_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::string MatGF::str() const {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    s << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) s << (j ? "," : "") << a_[i * n_ + j];
    s << ']';
  }
  s << ']';
  return s.str();
}

MatGF operator*(const MatGF& a, const MatGF& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_) throw InvalidArgument("matrix shape or field mismatch");
  const std::size_t n = a.n_;
  MatGF r(a.p_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t x = a.a_[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) r.a_[i * n + j] += x * b.a_[k * n + j];
    }
  for (auto& v : r.a_) v %= a.p_;
  return r;
}

MatGF mat_pow(const MatGF& m, std::int64_t e) {
  MatGF base = e < 0 ? m.inverse() : m;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  MatGF r = MatGF::identity(m.p(), m.n());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::uint64_t matrix_order(const MatGF& m) {
  if (!m.invertible()) throw InvalidArgument("singular matrix has no order");
  MatGF x = m;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    x = x * m;
    ++k;
  }
  return k;
}

MatGF direct_sum(const MatGF& a, const MatGF& b) {
  if (a.p() != b.p()) throw InvalidArgument("field mismatch");
  MatGF r(a.p(), a.n() + b.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) r.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) r.set(a.n() + i, a.n() + j, b(i, j));
  return r;
}

MatGF parse_matrix(const std::string& text, std::int64_t p) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("expected '") + c + "' in matrix literal", i);
    ++i;
  };
  auto integer = [&] {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected integer in matrix literal", i);
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  std::vector<std::vector<std::int64_t>> rows;
  expect('[');
  for (;;) {
    expect('[');
    std::vector<std::int64_t> row{integer()};
    skip();
    while (i < text.size() && text[i] == ',') {
      ++i;
      row.push_back(integer());
      skip();
    }
    expect(']');
    rows.push_back(std::move(row));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  skip();
  if (i < text.size() && text[i] == '@') {
    ++i;
    std::int64_t q = integer();
    if (p && q != p) throw ParseError("matrix modulus disagrees with context", i);
    p = q;
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters after matrix", i);
  if (p == 0) throw ParseError("matrix literal needs a modulus", i);
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw ParseError("matrix must be square", 0);
  return MatGF(p, rows);
}

std::size_t vector_index(const std::vector<std::int64_t>& v, std::int64_t p) {
  std::size_t idx = 0;
  for (auto x : v) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(mod(x, p));
  return idx;
}

std::vector<std::int64_t> index_vector(std::size_t idx, std::int64_t p, std::size_t n) {
  std::vector<std::int64_t> v(n);
  for (std::size_t k = n; k-- > 0;) {
    v[k] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(p));
    idx /= static_cast<std::size_t>(p);
  }
  return v;
}

Permutation matrix_to_perm(const MatGF& m) {
  if (!m.invertible()) throw InvalidArgument("singular matrix");
  const std::int64_t p = m.p();
  const std::size_t n = m.n();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= static_cast<std::size_t>(p);
  std::vector<Point> img(total);
  std::vector<std::int64_t> w(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto v = index_vector(idx, p, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += v[i] * m(i, j);
      w[j] = s % p;
    }
    img[idx] = static_cast<Point>(vector_index(w, p));
  }
  return Permutation::unchecked(std::move(img));
}

PermutationGroup matrix_group_to_perm(const MatrixGroup& g) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < g.n; ++k) total *= static_cast<std::size_t>(g.p);
  std::vector<Permutation> gens;
  for (const auto& m : g.generators) {
    if (m.p() != g.p || m.n() != g.n) throw InvalidArgument("generator shape mismatch");
    gens.push_back(matrix_to_perm(m));
  }
  return PermutationGroup(total, std::move(gens));
}

std::uint64_t gl_order(unsigned n, std::uint64_t p) {
  if (n == 0 || !is_prime(p)) throw InvalidArgument("gl_order needs n >= 1 and p prime");
  unsigned __int128 pn = 1;
  for (unsigned k = 0; k < n; ++k) pn *= p;
  unsigned __int128 r = 1, pi = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= (pn - pi);
    pi *= p;
    if (r >> 64) throw InvalidArgument("GL order overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace fgt
