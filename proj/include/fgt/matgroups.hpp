#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fgt/matrix.hpp"
#include "fgt/perm_group.hpp"

namespace fgt {

// Sylow 2-subgroup of GL(2,p). For p = 3 mod 4 with 2^n || p+1 it is
// quasidihedral of order 2^(n+2), generated by [[0,1],[1,x]] (order 2^(n+1),
// smallest x) and [[1,0],[x,-1]]. For p = 1 mod 4 with 2^n || p-1 it is
// C_{2^n} wr C2, generated by diag(1,z) and the coordinate swap.
MatrixGroup sylow2_gl2(std::int64_t p);

// Block construction: wreathing doubles the block size, binary digits of n
// give the direct factors.
MatrixGroup sylow2_gln(unsigned n, std::int64_t p);

// Largest power of 2 dividing n.
std::uint64_t two_part(std::uint64_t n);

// Name for small 2-groups and a few families: order-16 names, the order-32
// catalog, Cn, Dn, QDn, Qn, CmwrC2; otherwise "order<N>-fp:<hash>".
std::string group_label(const ElementTable& t);
std::string group_label(const PermutationGroup& g);

// Isomorphism type label -> number of subgroups of order k.
std::map<std::string, std::size_t> subgroup_inventory(const PermutationGroup& g, std::size_t k);

// Element order -> class sizes in the compact "(1,2^5,8)" notation.
std::map<std::uint64_t, std::string> class_order_structure(const PermutationGroup& g);

}  // namespace fgt
