#pragma once
#include <vector>

#include "json.hpp"

#include "cgt/groups.hpp"
#include "cgt/modp.hpp"

namespace cgt {

// Class algebra structure constants: at(i,j,k) counts pairs (x,y) with
// x in C_i, y in C_j and x*y equal to the fixed representative of C_k.
// Stored sparsely per (i,j).
struct ClassAlgebraConstants {
  int num_classes = 0;
  std::vector<std::vector<std::pair<int, i64>>> entries;  // [i*r+j] -> {(k, count)}
  const std::vector<std::pair<int, i64>>& pair(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * num_classes + j];
  }
  i64 at(int i, int j, int k) const;
};

// O(r*|G|) counting pass over the pairs (x, y) with x*y = rep_k.
ClassAlgebraConstants class_algebra_constants(const FiniteGroup& G,
                                              const ConjugacyClassPartition& P);

// Reference implementation: scans all |G|^2 pairs and divides the class
// totals by |C_k|. Kept for cross-checking and the benchmark.
ClassAlgebraConstants class_algebra_constants_bruteforce(const FiniteGroup& G,
                                                         const ConjugacyClassPartition& P);

// Smallest prime p with p = 1 (mod exponent) and p > 2*order.
i64 choose_prime(i64 order, i64 exponent);
// Smallest qualifying prime strictly greater than `after`.
i64 next_qualifying_prime(i64 order, i64 exponent, i64 after);

struct ModularCharacterTable {
  i64 p = 0;
  u64 zeta = 0;       // fixed element of multiplicative order `exponent`
  i64 exponent = 0;   // group exponent e; p = 1 (mod e)
  i64 group_order = 0;
  int num_irreps = 0;
  std::vector<i64> degrees;         // exact lifted integers
  std::vector<u64> values;          // row-major (irrep, class)
  std::vector<i64> class_sizes;
  std::vector<int> inverse_class;
  u64 value(int irrep, int cls) const {
    return values[static_cast<std::size_t>(irrep) * num_irreps + cls];
  }
};

// Dixon-Schneider: simultaneous eigenvectors of the class matrices over F_p.
// prime = 0 selects choose_prime(|G|, exponent).
ModularCharacterTable character_table_mod_p(const FiniteGroup& G,
                                            const ConjugacyClassPartition& P,
                                            const ClassAlgebraConstants& C, i64 prime = 0);
ModularCharacterTable character_table_mod_p(const FiniteGroup& G, i64 prime = 0);

// Row orthogonality over F_p: sum_j |C_j| v[i][j] v[i'][jbar] = |G| d_ii'.
bool verify_orthogonality(const ModularCharacterTable& T);

// Ingestion schema:
// {"p":..,"zeta":..,"class_sizes":[..],"inverse_class":[..],"degrees":[..],
//  "values":[[..],..]}; validated (orthogonality included) before use.
nlohmann::json table_to_json(const ModularCharacterTable& T);
ModularCharacterTable table_from_json(const nlohmann::json& j);

// Fixed points of one representative per class (a permutation character).
std::vector<i64> permutation_character(const FiniteGroup& G, const ConjugacyClassPartition& P);
// Class index of rep^2 for each class.
std::vector<int> squared_class_map(const FiniteGroup& G, const ConjugacyClassPartition& P);
// Exact multiplicity <chi_i, theta> for an integer-valued class function theta.
std::vector<i64> irrep_multiplicities(const ModularCharacterTable& T,
                                      const std::vector<i64>& theta);
// Frobenius-Schur indicators, each in {-1, 0, 1}.
std::vector<i64> frobenius_schur_indicators(const ModularCharacterTable& T,
                                            const std::vector<int>& squared_class);

}  // namespace cgt
