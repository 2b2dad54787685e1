#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgt {

using Residue = std::int64_t;

std::int64_t mod(std::int64_t a, std::int64_t p);
std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);
bool is_prime(std::uint64_t n);
// Multiplicative order of a unit a mod p.
std::uint64_t unit_order(std::int64_t a, std::int64_t p);
// Exponent of 2 in n (n > 0).
unsigned two_adic(std::uint64_t n);

// Solutions of one constraint, sorted ascending. Single residues are stored
// as one-element tuples.
struct SolutionSet {
  std::int64_t p = 0;
  std::string constraint;
  std::vector<std::vector<Residue>> solutions;
  // Candidates that satisfied the congruence but failed a follow-up audit.
  std::vector<std::vector<Residue>> rejected;
  std::vector<std::string> notes;

  std::vector<Residue> values() const;  // first coordinate of each solution
  bool contains(const std::vector<Residue>& tuple) const;
};

SolutionSet roots_of_unity(std::int64_t p, std::uint64_t t);

enum class ActionKind { D8, QD8, Q4Pair };
// D8: 2x^2 = 1; QD8: 2x^2 = -1; Q4Pair: a^2 + b^2 = -1.
SolutionSet action_params(std::int64_t p, ActionKind kind);

// (x, y) making [[0,1],[x,y]] a matrix of order 16. For p = 7 mod 8 the
// candidates are x = 1 with (y^2+2)^2 = 2 and x = -1 with (y^2-2)^2 = 2, each
// kept only if the matrix order is 16; x is reported as the signed value.
// For p = 9 mod 16 the pairs are (x, 0) with x of order exactly 8.
SolutionSet c16_action_params(std::int64_t p);

// Roots of f_n(x) = 2 where f_3 = (x^2+2)^2 and f_{k+1} = (f_k - 2)^2.
// Requires n >= 3 and p = -1 mod 2^n.
SolutionSet iterated_radical_roots(std::int64_t p, unsigned n);

enum class CoxeterForm { OffdiagPair, GeneralQuadruple, TimesCqPair };
// Parameters for b such that a = [[-1,1],[-1,0]] and b generate a <2,3,4>
// representation. OffdiagPair: b = [[1,x],[y,-1]] with x*y = -2.
// GeneralQuadruple: b = [[v,x],[y,w]] of order 4. TimesCqPair: b = [[1,x],[y,-1]]
// of order 2(p-1) satisfying the <2,3,4> x Cq relators.
SolutionSet coxeter234_search(std::int64_t p, CoxeterForm form);

std::int64_t primitive_root(std::int64_t p);
// Residues x whose negation is a primitive root, the reading under which the
// holomorph relator a^b * a^x = 1 makes b act with order p-1.
SolutionSet negated_primitive_roots(std::int64_t p);
// Every unit satisfies x^(p-1) = 1; listed for completeness of the second reading.
SolutionSet unit_roots(std::int64_t p);

}  // namespace fgt
