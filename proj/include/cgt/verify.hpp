#pragma once
#include <string>
#include <vector>

#include "json.hpp"

#include "cgt/pipeline.hpp"

namespace cgt {

struct StatementResult {
  std::string id;
  bool applicable = true;
  bool pass = false;
  nlohmann::json witness;  // failure data; null when passing
  double seconds = 0.0;
};

struct VerificationReport {
  std::string subject;
  std::vector<StatementResult> statements;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

// C0: labels occurring in some X (x) dual(X), closed under fusion products
// and duals.
std::vector<int> compute_C0(const FusionRing& F);

// Kernel equality ker p_G = ker r_G, the induced map chain class ->
// central character bijective and homomorphic, and equal invariant factors
// on both sides.
StatementResult verify_chain_center_isomorphism(const GroupAnalysis& A);
// C0 equals the labels with trivial central character.
StatementResult verify_c0_center_triviality(const GroupAnalysis& A);
// Labels projecting to zero in the chain group are exactly C0.
StatementResult verify_projection_kernel_c0(const GroupAnalysis& A);
// phi(unit) = 0 and phi(dual) = -phi for a map into Z-tuples with the given
// moduli (0 = free coordinate); phi must already satisfy the t-map law.
StatementResult verify_tmap_basics(const std::string& id,
                                   const std::vector<std::vector<i64>>& phi,
                                   const std::vector<i64>& moduli, const FusionRing& F);

// All t-maps into Z/m: homomorphisms from the presented cokernel, each
// re-verified against the raw tensor-compatibility condition. The count is
// prod gcd(f_t, m).
std::vector<std::vector<i64>> enumerate_tmaps(const ChainGroupPresentation& P,
                                              const FusionRing& F, i64 m);

// Every t-map into Z/m factors through the central characters: beta well
// defined on r_G fibers, homomorphic, beta(r_G) = phi, and the map count
// matches prod gcd(m_t, m).
StatementResult verify_tmap_factorization(const GroupAnalysis& A, i64 m);

// Full statement suite for a group-derived analysis.
VerificationReport verify_group(const GroupAnalysis& A, const std::vector<i64>& moduli);

// Chain-side checks for a file-ingested ring; center-side statements are
// reported as not applicable.
VerificationReport verify_fusion_ring_statements(const FusionRing& F,
                                                 const ChainGroupPresentation& chain,
                                                 const ChainClassPartition& classes,
                                                 const std::vector<i64>& moduli);

}  // namespace cgt
