#pragma once
#include <vector>

#include "json.hpp"

#include "cgt/chaingroup.hpp"
#include "cgt/charmod.hpp"

namespace cgt {

// Invariant-factor decomposition of an abelian subgroup, with group elements
// realizing each cyclic component and the full element -> exponent-tuple map.
struct AbelianGroupStructure {
  std::vector<i64> invariant_factors;   // m_1 | m_2 | ..., each > 1
  std::vector<int> generator_elements;  // element indices, one per factor
  std::vector<int> subgroup_elements;   // ascending element indices
  // exponent tuple of each subgroup element, aligned with subgroup_elements
  std::vector<std::vector<i64>> element_exponents;

  i64 subgroup_order() const { return static_cast<i64>(subgroup_elements.size()); }
  const std::vector<i64>& exponents_of(int element) const;
};

// Presents the subgroup on all its elements with its multiplication table as
// relations and reads the decomposition off the SNF transform.
AbelianGroupStructure abelian_invariants(const FiniteGroup& G, const std::vector<int>& subgroup);

// A character of the center, encoded as exponents over the recorded
// generators: generator z_t maps to the canonical order-m_t root raised to
// exponents[t].
struct CentralCharacter {
  std::vector<i64> exponents;
  bool operator==(const CentralCharacter&) const = default;
  bool operator<(const CentralCharacter& o) const { return exponents < o.exponents; }
  bool is_trivial() const;
};

CentralCharacter central_character_add(const CentralCharacter& a, const CentralCharacter& b,
                                       const std::vector<i64>& moduli);
CentralCharacter central_character_neg(const CentralCharacter& a, const std::vector<i64>& moduli);

// Schur scalar data: omega = chi_i(z_t)/d_i has order dividing m_t; the
// exponent is its discrete log base zeta^(e/m_t).
CentralCharacter central_character(int irrep, const ModularCharacterTable& T,
                                   const ConjugacyClassPartition& P,
                                   const AbelianGroupStructure& Z);

struct RestrictionTmap {
  std::vector<CentralCharacter> chars;  // per irrep
  bool is_tmap = false;
  bool is_surjective = false;
};

// Restriction of every irrep to the center, with the tensor-compatibility
// and surjectivity flags computed against the fusion ring.
RestrictionTmap restriction_tmap(const ModularCharacterTable& T, const ConjugacyClassPartition& P,
                                 const AbelianGroupStructure& Z, const FusionRing& F);

// All characters of the abelian group, componentwise addition.
std::vector<CentralCharacter> dual_group(const AbelianGroupStructure& Z);

// Invariant factors of the group of degree-1 labels under fusion.
std::vector<i64> abelianization_dual(const FusionRing& F);

// {"center_invariants":[...],"generators":[...],"r_G":{label:[e_1,...]},
//  "abelianization_dual":[...]}
nlohmann::json center_report_json(const AbelianGroupStructure& Z, const RestrictionTmap& rG,
                                  const FusionRing& F, const std::vector<i64>& ab_dual);

}  // namespace cgt
