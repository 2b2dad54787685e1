#include "fgt/perm.hpp"

#include <numeric>
#include <sstream>

#include "fgt/error.hpp"

namespace fgt {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidArgument("permutation degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidArgument("image list is not a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation r;
  r.images_ = std::move(images);
  return r;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles,
                                     bool one_based) {
  Permutation result(degree);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    // Apply each cycle after the previous ones.
    std::vector<Point> step(degree);
    std::iota(step.begin(), step.end(), Point{0});
    std::vector<char> used(degree, 0);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i] - (one_based ? 1 : 0);
      Point to = cyc[(i + 1) % cyc.size()] - (one_based ? 1 : 0);
      if (from >= degree || to >= degree)
        throw InvalidArgument("cycle point out of range");
      if (used[from]) throw InvalidArgument("repeated point in cycle");
      used[from] = 1;
      step[from] = to;
    }
    result = compose(result, Permutation::unchecked(std::move(step)));
  }
  return result;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree,
                               bool one_based) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError("expected point", i);
      Point v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + static_cast<Point>(text[i++] - '0');
      if (one_based && v == 0) throw ParseError("point 0 in one-based cycle", i);
      cyc.push_back(v);
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(degree, cycles, one_based);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles(bool one_based) const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  const Point shift = one_based ? 1 : 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) out << (one_based ? "," : " ");
      out << j + shift;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("degree mismatch in compose");
  std::vector<Point> r(a.degree());
  const auto& ai = a.images();
  const auto& bi = b.images();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = bi[ai[i]];
  return Permutation::unchecked(std::move(r));
}

Permutation power(const Permutation& a, std::int64_t e) {
  Permutation base = e < 0 ? a.inverse() : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  std::uint64_t ord = a.order();
  n %= ord;
  Permutation result(a.degree());
  while (n) {
    if (n & 1) result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) h = (h ^ v) * 1099511628211ull;
  return h;
}

}  // namespace fgt
