#pragma once
#include <string>

#include "cgt/centerdual.hpp"

namespace cgt {

inline constexpr const char* kToolkitVersion = "1.0.0";

struct AnalysisOptions {
  i64 order_bound = kDefaultOrderBound;
  i64 prime = 0;          // 0 = smallest qualifying prime
  std::string cache_dir;  // empty disables the cache
};

// Everything the verification suite consumes, with the character table and
// fusion ring in canonical label order (prime-independent relabeling).
struct GroupAnalysis {
  FiniteGroup group;
  ConjugacyClassPartition classes;
  ClassAlgebraConstants constants;
  ModularCharacterTable table;
  FusionRing ring;
  AbelianGroupStructure center;
  RestrictionTmap rG;
  ChainGroupPresentation chain;
  ChainClassPartition chain_classes;
  std::vector<i64> ab_dual;
  bool from_cache = false;
};

GroupAnalysis analyze_group(FiniteGroup G, const AnalysisOptions& opt = {});

// Canonical ordering of the fusion labels: sorts by prime-independent keys
// (unit first, degree, Frobenius-Schur indicator, permutation-character
// multiplicity, central character) and refines by the fusion tensor with
// individualization until every cell is a singleton. Returns the old index
// at each canonical position.
std::vector<int> canonical_label_order(const FusionRing& ring,
                                       const std::vector<std::vector<i64>>& base_keys);

// Spreadsheet-style suffix: 0 -> "a", 25 -> "z", 26 -> "aa", ...
std::string alpha_suffix(int n);

i64 cache_key(const nlohmann::json& spec, i64 prime);

}  // namespace cgt
