#pragma once

#include <cstdint>
#include <vector>

#include "fgt/perm_group.hpp"

namespace fgt::oracle {

// Closure by right multiplication, independent of the library's helpers.
inline std::vector<bool> span(const ElementTable& t, const std::vector<Elem>& gens) {
  std::vector<bool> in(t.size(), false);
  std::vector<Elem> queue{0};
  in[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem g : gens) {
      Elem y = t.mul(queue[i], g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  return in;
}

// Each step adds the smallest element outside the current subgroup.
inline std::vector<Elem> naive_generators(const ElementTable& t) {
  std::vector<Elem> gens;
  auto in = span(t, gens);
  for (Elem x = 0; x < t.size(); ++x)
    if (!in[x]) {
      gens.push_back(x);
      in = span(t, gens);
    }
  return gens;
}

// Tries every tuple of generator images; a tuple counts when the induced map
// is a well-defined bijection that preserves the full multiplication table.
inline std::uint64_t count_automorphisms(const ElementTable& t) {
  const std::size_t n = t.size();
  const auto gens = naive_generators(t);
  if (gens.empty()) return 1;
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Elem y = 0; y < n; ++y)
      if (t.order_of(y) == t.order_of(gens[j])) cands[j].push_back(y);

  std::uint64_t count = 0;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Elem> phi(n);
  while (true) {
    std::fill(phi.begin(), phi.end(), ElementTable::npos);
    phi[0] = 0;
    std::vector<Elem> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        Elem x = queue[i];
        Elem y = t.mul(x, gens[j]);
        Elem img = t.mul(phi[x], cands[j][pick[j]]);
        if (phi[y] == ElementTable::npos) {
          phi[y] = img;
          queue.push_back(y);
        } else if (phi[y] != img) {
          ok = false;
        }
      }
    if (ok) {
      std::vector<bool> hit(n, false);
      for (Elem x = 0; x < n && ok; ++x) {
        if (hit[phi[x]]) ok = false;
        hit[phi[x]] = true;
      }
    }
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        if (phi[t.mul(x, y)] != t.mul(phi[x], phi[y])) ok = false;
    count += ok;
    std::size_t j = 0;
    while (j < gens.size() && ++pick[j] == cands[j].size()) pick[j++] = 0;
    if (j == gens.size()) break;
  }
  return count;
}

}  // namespace fgt::oracle
