#pragma once
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgt/charmod.hpp"

namespace cgt {

// Fusion ring: labels, unit, dual involution, sparse nonnegative
// multiplicities N[i][j][k]. Labels are opaque strings; all arithmetic uses
// dense indices.
struct FusionRing {
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  std::vector<std::vector<std::pair<int, i64>>> N;  // [i*rank+j] -> {(k, mult>0)}
  bool commutative = false;
  std::vector<i64> degrees;  // lifted degrees for group-derived rings, else empty

  int rank() const { return static_cast<int>(labels.size()); }
  const std::vector<std::pair<int, i64>>& products(int i, int j) const {
    return N[static_cast<std::size_t>(i) * labels.size() + j];
  }
  i64 mult(int i, int j, int k) const;
  int label_index(const std::string& s) const;
};

struct ValidationIssue {
  std::string axiom;  // "unit", "duality", "dual-compatibility", "associativity", ...
  std::vector<int> indices;
  std::string detail;
};

// Checks unit laws, duality N[i][j][unit] = delta_{j,dual(i)}, optional dual
// compatibility N[i][j][k] = N[dual(k)][i][dual(j)], and the associativity
// quadruple scan (full below rank_bound, sampled above).
std::vector<ValidationIssue> validate_fusion_ring(const FusionRing& F,
                                                  bool check_dual_compatibility = false,
                                                  int rank_bound = 256);

// Scan of sum_m N[i][j][m] N[m][k][l] = sum_m N[j][k][m] N[i][m][l] over all
// quadruples. The parallel flavor is the production path; the serial one is
// the reference kept for tests and the benchmark.
std::vector<ValidationIssue> associativity_violations(const FusionRing& F);
std::vector<ValidationIssue> associativity_violations_serial(const FusionRing& F);

// N[i][j][k] = |G|^-1 sum_c |C_c| chi_i(c) chi_j(c) chi_k(cbar) in F_p,
// lifted exactly (0 <= N <= |G| < p). Throws if a lift exceeds |G|.
// The parallel kernel is the production path; parallel=false runs the
// serial reference used by the tests and the benchmark.
FusionRing fusion_from_character_table(const ModularCharacterTable& T,
                                       const ConjugacyClassPartition& P, i64 order,
                                       bool parallel = true);

// Fusion-ring JSON:
// {"labels":[...],"unit":"1","dual":{...},"tensor":{"a,b":{"c":1,...},...},
//  "commutative":true}
// Pairs involving the unit may be omitted (unit laws fill them in); with
// "commutative":true the symmetric closure is applied; all other pairs must
// be listed.
FusionRing fusion_from_json(const nlohmann::json& j);
FusionRing fusion_from_file(const std::string& path);
nlohmann::json fusion_to_json(const FusionRing& F);

// Lazily presented fusion rule on a possibly infinite label universe.
// Labels are integer ids; `level` grades the universe for truncation.
struct FusionOracle {
  std::string name;
  i64 unit = 0;
  std::function<std::vector<i64>(i64, i64)> product;  // multiset of labels
  std::function<i64(i64)> dual;
  std::function<i64(i64)> level;
  std::function<std::vector<i64>(i64)> labels_up_to_level;
  std::function<std::string(i64)> label_name;
};

// SU(2) Clebsch-Gordan rule on doubled spins: product(l1,l2) =
// {|l1-l2|, |l1-l2|+2, ..., l1+l2}; unit 0, self-dual, level(l) = l.
FusionOracle su2_fusion_oracle();

// Finite oracle view of a fusion ring; every non-unit label sits at level 1.
FusionOracle oracle_from_ring(const FusionRing& F);

}  // namespace cgt
