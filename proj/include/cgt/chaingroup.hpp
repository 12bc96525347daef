#pragma once
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgt/fusion.hpp"
#include "cgt/snf.hpp"

namespace cgt {

// Presentation of the chain group: one relation x_i + x_j - x_k per triple
// with N[i][j][k] > 0, cokernel computed through the Smith normal form.
struct ChainGroupPresentation {
  std::vector<std::string> generator_labels;
  std::vector<SparseRow> relations;        // deduplicated, canonical sparse form
  std::vector<i64> invariant_factors;      // f_1 | f_2 | ..., each > 1
  int free_rank = 0;
  // label -> coordinates (torsion coords mod f_t, then free coords)
  std::vector<std::vector<i64>> projection;

  bool projection_is_zero(int label) const;
};

ChainGroupPresentation chain_group_snf(const FusionRing& F);

// Equivalence classes of labels under shared tensor chains: union-find
// seeded by "constituents of one product are equivalent", closed under the
// product congruence, with the class product table verified independent of
// representatives.
struct ChainClassPartition {
  std::vector<int> class_of;  // label -> class id (ids dense, 0-based)
  int class_count = 0;
  int unit_class = 0;
  std::vector<std::vector<int>> product_table;  // class x class -> class
  std::vector<int> inverse_of;                  // class -> class
};

ChainClassPartition chain_equivalence_classes(const FusionRing& F);

// Invariant factors of the finite abelian group presented by the class
// product table (reuses the SNF cokernel machinery).
std::vector<i64> class_group_structure(const ChainClassPartition& P);

// True iff the invariant factors agree and the equivalence classes coincide with the
// fibers of the presentation's projection.
bool compare_chain_groups(const ChainGroupPresentation& A, const ChainClassPartition& B);

struct TruncationLevel {
  i64 level = 0;
  std::vector<i64> window;  // oracle labels inside the level
  ChainGroupPresentation presentation;
};

struct TruncationReport {
  std::vector<TruncationLevel> levels;
  // Set when at least two levels exist: final two levels have equal factors,
  // zero free rank, and agreeing projection fibers on shared generators.
  std::optional<bool> stabilized;
};

// Per level l = 1..max_level: generators are the oracle labels with
// level <= l, relations are the oracle triples with all three participants
// inside the window.
TruncationReport truncated_chain_group(const FusionOracle& oracle, i64 max_level);

// {"invariant_factors":[...],"free_rank":0,"classes":{label:classId},
//  "stabilized":true|false|null}
nlohmann::json presentation_report_json(const ChainGroupPresentation& A,
                                        const ChainClassPartition* classes,
                                        std::optional<bool> stabilized);

}  // namespace cgt
