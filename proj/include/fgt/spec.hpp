#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgt/matrix.hpp"
#include "fgt/perm_group.hpp"
#include "fgt/presentation.hpp"

namespace fgt {

// Index conventions: dihedral(n) has order 2n, dicyclic(n) order 4n and
// quasidihedral(k) order 2k, so D8, Q4 and QD8 all have order 16.
enum class SpecKind {
  Cyclic,         // cyclic(n)
  ElemAbelian,    // elemab(p,k)
  DirectProduct,  // dp(A,B,...)
  Semidirect,     // sd(P,T,action=...) or sd(P,T,preset=...)
  Wreath,         // wr(A): (A x A) @ C2
  Central,        // yprod(A,B,zA,zB)
  Holomorph,      // hol(A)
  Order16,        // order16(NAME)
  Dihedral,       // dihedral(n)
  Quasidihedral,  // quasidihedral(k)
  Dicyclic,       // dicyclic(n)
  Presentation,   // pres{gens; relators; params}
  Family16p,      // fam16p(NAME,p,image,gens)
  Family16p2,     // fam16p2(NAME,p,preset)
  AutOf,          // aut(A)
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct GroupSpec {
  SpecKind kind = SpecKind::Cyclic;
  std::int64_t n = 0;  // cyclic/dihedral/quasidihedral/dicyclic index, elemab p, family p
  std::int64_t k = 0;  // elemab rank
  std::string name;     // order16 or family two-group name
  std::string preset;   // sd and fam16p2 action preset
  std::string image;    // fam16p image label
  std::string letters;  // fam16p acting generators
  std::vector<GroupSpec> children;
  std::vector<IntMatrix> action;  // one per generator of the acting group
  std::int64_t modulus = 0;
  Params preset_params;
  std::string za, zb;  // yprod identified words
  std::string pres;    // canonical presentation text

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec cyclic_spec(std::int64_t n);
GroupSpec elemab_spec(std::int64_t p, std::int64_t k);
GroupSpec order16_spec(const std::string& name);
GroupSpec dp_spec(std::vector<GroupSpec> parts);
GroupSpec hol_spec(GroupSpec a);
GroupSpec wr_spec(GroupSpec a);
GroupSpec aut_spec(GroupSpec a);
GroupSpec sd_matrices_spec(GroupSpec p_part, GroupSpec acting, std::vector<IntMatrix> action,
                           std::int64_t modulus);
GroupSpec sd_preset_spec(GroupSpec p_part, GroupSpec acting, std::string preset,
                         Params params = {});
GroupSpec pres_spec(std::string_view text);

GroupSpec parse_spec(std::string_view text);
std::string print_spec(const GroupSpec& s);

PermutationGroup build(const GroupSpec& s);
// Order implied by the structure; holomorph and aut nodes compute Aut orders.
std::uint64_t predicted_order(const GroupSpec& s);

// The 14 names in the fixed order C16, C8xC2, ..., Q4.
const std::vector<std::string>& order16_names();
Presentation order16_presentation(const std::string& name);

// Matrices (one per generator of `acting`) for a named action. rank is the
// dimension of the p-part (1 or 2).
std::vector<MatGF> preset_action(const std::string& preset, const Params& params, std::int64_t p,
                                 std::size_t rank, const PermutationGroup& acting);
const std::vector<std::string>& preset_names();

struct Family16p {
  PermutationGroup group;
  // Hol(Cp) x factor from the reference table, when the row is listed there.
  std::optional<GroupSpec> expected_aut;
  std::string factor_label;
};
// Cp @ (order-16 group); image is C2, C4, C8 or C16 and letters names the
// generators acting nontrivially.
Family16p family_16p(const std::string& name, std::int64_t p, const std::string& image,
                     const std::string& letters);
// Expected second factor of Aut for a table2a factor label, e.g. "Hol(2,1)".
GroupSpec table2a_factor(const std::string& label);

}  // namespace fgt
