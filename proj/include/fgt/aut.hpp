#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgt/group_props.hpp"
#include "fgt/perm_group.hpp"
#include "fgt/presentation.hpp"

namespace fgt {

struct Automorphism {
  std::vector<Elem> generator_images;  // images of AutGroupResult::search_gens
  Permutation element_permutation;     // degree |G|, over table indices
};

struct AutOptions {
  // Largest Aut for which an element table (and fingerprint) is built.
  std::size_t fingerprint_cap = 60000;
  bool compute_fingerprint = true;
  // Build the orbit-reduced representation (needed for fingerprints).
  bool reduce = true;
};

struct AutGroupResult {
  std::vector<Elem> search_gens;
  std::vector<Automorphism> generators;  // strong generators, deepest level last
  PermutationGroup group;                // acting on the |G| table indices
  // Faithful action on a union of Aut-orbits that generates G.
  PermutationGroup reduced;
  std::vector<Elem> reduced_points;      // table index of each reduced point
  std::uint64_t order = 1;
  std::uint64_t inner_order = 1;
  std::uint64_t center_order = 1;
  bool complete = false;
  std::optional<Fingerprint> fingerprint;
  std::optional<std::string> identification;
  std::vector<std::uint64_t> orbit_sizes;  // one per search level
};

// Per-element isomorphism invariants: order, class size, root count and the
// same data for x^r at each prime r dividing the order.
std::vector<std::vector<std::uint64_t>> element_invariants(const ElementTable& t);

// Greedy generating set: each step adds the element enlarging the subgroup
// most, preferring rare invariants; redundant generators are dropped.
std::vector<Elem> search_generators(const ElementTable& t);

AutGroupResult automorphism_group(const ElementTable& t, const std::vector<Elem>& gens = {},
                                  const AutOptions& opts = {});

struct IsoCertificate {
  std::vector<Elem> source_gens;  // generators of the first group
  std::vector<Elem> images;       // their images in the second group
};
std::optional<IsoCertificate> is_isomorphic(const ElementTable& g, const ElementTable& h);

bool is_complete(const ElementTable& t);
PermutationGroup inner_automorphisms(const ElementTable& t);

// Images in t for the presentation's generators that satisfy every relator and
// generate the group, if any exist.
std::optional<std::vector<Elem>> find_epimorphism(const Presentation& pres, const ElementTable& t);

// Todd-Coxeter index equals |g| and an epimorphism onto g exists.
bool validate_presentation(const Presentation& pres, const PermutationGroup& g,
                           std::size_t cap = default_element_cap());

// Aut-orbit reduction of an arbitrary permutation representation of Aut.
PermutationGroup reduce_aut_degree(const ElementTable& t, const std::vector<Permutation>& auts,
                                   std::vector<Elem>* points = nullptr);

struct TowerStep {
  Fingerprint fingerprint;
  std::uint64_t center_order = 0;
  bool complete = false;
  double seconds = 0;
};

struct Tower {
  std::vector<TowerStep> steps;  // the group, then Aut, Aut(Aut), ...
  bool terminated = false;       // reached a complete group
  bool truncated = false;        // stopped by maxSteps, maxOrder or a cap
  std::string stop_reason;
};

// Successive automorphism groups, each realized from the previous result's
// reduced representation.
Tower aut_tower(const PermutationGroup& g, std::size_t max_steps, std::uint64_t max_order);


}  // namespace fgt
