#include "cgt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace cgt {

using nlohmann::json;

bool VerificationReport::all_passed() const {
  for (const auto& s : statements)
    if (s.applicable && !s.pass) return false;
  return true;
}

// Timings stay out of the JSON contract: cached and cold runs must emit
// byte-identical reports. The text summary prints them instead.
json VerificationReport::to_json() const {
  json st = json::array();
  for (const auto& s : statements) {
    json e{{"id", s.id}, {"applicable", s.applicable}, {"pass", s.pass}};
    e["witness"] = s.witness.is_null() ? json(nullptr) : s.witness;
    st.push_back(std::move(e));
  }
  return json{{"subject", subject}, {"all_passed", all_passed()}, {"statements", std::move(st)}};
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

json label_list(const FusionRing& F, const std::vector<int>& idx) {
  json out = json::array();
  for (int i : idx) out.push_back(F.labels[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::vector<int> compute_C0(const FusionRing& F) {
  const int r = F.rank();
  std::vector<char> in(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i)
    for (const auto& [k, m] : F.products(i, F.dual[static_cast<std::size_t>(i)])) {
      (void)m;
      in[static_cast<std::size_t>(k)] = 1;
    }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < r; ++a) {
      if (!in[static_cast<std::size_t>(a)]) continue;
      if (!in[static_cast<std::size_t>(F.dual[static_cast<std::size_t>(a)])]) {
        in[static_cast<std::size_t>(F.dual[static_cast<std::size_t>(a)])] = 1;
        grew = true;
      }
      for (int b = 0; b < r; ++b) {
        if (!in[static_cast<std::size_t>(b)]) continue;
        for (const auto& [k, m] : F.products(a, b)) {
          (void)m;
          if (!in[static_cast<std::size_t>(k)]) {
            in[static_cast<std::size_t>(k)] = 1;
            grew = true;
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < r; ++i)
    if (in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

StatementResult verify_chain_center_isomorphism(const GroupAnalysis& A) {
  Timer timer;
  StatementResult R{.id = "chain_center_isomorphism"};
  const int r = A.ring.rank();

  // (a) kernel equality as partitions: p_G fibers vs r_G fibers.
  std::map<std::vector<i64>, int> proj_fiber, char_fiber;
  std::vector<int> pf(static_cast<std::size_t>(r)), cf(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    pf[static_cast<std::size_t>(i)] = static_cast<int>(
        proj_fiber.emplace(A.chain.projection[static_cast<std::size_t>(i)], proj_fiber.size()).first->second);
    cf[static_cast<std::size_t>(i)] = static_cast<int>(
        char_fiber.emplace(A.rG.chars[static_cast<std::size_t>(i)].exponents, char_fiber.size()).first->second);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if ((pf[static_cast<std::size_t>(i)] == pf[static_cast<std::size_t>(j)]) !=
          (cf[static_cast<std::size_t>(i)] == cf[static_cast<std::size_t>(j)])) {
        R.witness = json{{"reason", "kernel fibers differ"},
                         {"labels", label_list(A.ring, {i, j})},
                         {"same_chain_fiber", pf[static_cast<std::size_t>(i)] == pf[static_cast<std::size_t>(j)]},
                         {"same_central_character", cf[static_cast<std::size_t>(i)] == cf[static_cast<std::size_t>(j)]}};
        R.seconds = timer.seconds();
        return R;
      }

  // (b) induced map chain class -> central character, well-defined bijection.
  std::map<int, CentralCharacter> induced;
  for (int i = 0; i < r; ++i) {
    const int cls = A.chain_classes.class_of[static_cast<std::size_t>(i)];
    auto [it, inserted] = induced.emplace(cls, A.rG.chars[static_cast<std::size_t>(i)]);
    if (!inserted && !(it->second == A.rG.chars[static_cast<std::size_t>(i)])) {
      R.witness = json{{"reason", "induced map not well-defined"},
                       {"label", A.ring.labels[static_cast<std::size_t>(i)]}};
      R.seconds = timer.seconds();
      return R;
    }
  }
  std::set<std::vector<i64>> images;
  for (const auto& [cls, ch] : induced) images.insert(ch.exponents);
  i64 dual_order = 1;
  for (i64 m : A.center.invariant_factors) dual_order *= m;
  if (static_cast<i64>(induced.size()) != dual_order ||
      images.size() != induced.size()) {
    R.witness = json{{"reason", "induced map not a bijection"},
                     {"chain_classes", A.chain_classes.class_count},
                     {"dual_order", dual_order}};
    R.seconds = timer.seconds();
    return R;
  }

  // (c) homomorphism against the class product table.
  for (int a = 0; a < A.chain_classes.class_count; ++a)
    for (int b = 0; b < A.chain_classes.class_count; ++b) {
      const int ab = A.chain_classes.product_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      const auto sum = central_character_add(induced.at(a), induced.at(b), A.center.invariant_factors);
      if (!(induced.at(ab) == sum)) {
        R.witness = json{{"reason", "induced map not a homomorphism"}, {"classes", {a, b}}};
        R.seconds = timer.seconds();
        return R;
      }
    }

  // Invariant factors agree on both sides (chain group vs center).
  if (A.chain.free_rank != 0 || A.chain.invariant_factors != A.center.invariant_factors) {
    R.witness = json{{"reason", "invariant factors differ"},
                     {"chain", A.chain.invariant_factors},
                     {"center", A.center.invariant_factors},
                     {"free_rank", A.chain.free_rank}};
    R.seconds = timer.seconds();
    return R;
  }

  R.pass = true;
  R.seconds = timer.seconds();
  return R;
}

StatementResult verify_c0_center_triviality(const GroupAnalysis& A) {
  Timer timer;
  StatementResult R{.id = "c0_equals_center_trivial"};
  const auto c0 = compute_C0(A.ring);
  std::vector<int> trivial;
  for (int i = 0; i < A.ring.rank(); ++i)
    if (A.rG.chars[static_cast<std::size_t>(i)].is_trivial()) trivial.push_back(i);
  if (c0 == trivial) {
    R.pass = true;
  } else {
    R.witness = json{{"reason", "C0 differs from the center-trivial labels"},
                     {"c0", label_list(A.ring, c0)},
                     {"center_trivial", label_list(A.ring, trivial)}};
  }
  R.seconds = timer.seconds();
  return R;
}

StatementResult verify_projection_kernel_c0(const GroupAnalysis& A) {
  Timer timer;
  StatementResult R{.id = "chain_kernel_equals_c0"};
  const auto c0 = compute_C0(A.ring);
  std::vector<int> kernel;
  for (int i = 0; i < A.ring.rank(); ++i)
    if (A.chain.projection_is_zero(i)) kernel.push_back(i);
  if (kernel == c0) {
    R.pass = true;
  } else {
    R.witness = json{{"reason", "projection kernel differs from C0"},
                     {"kernel", label_list(A.ring, kernel)},
                     {"c0", label_list(A.ring, c0)}};
  }
  R.seconds = timer.seconds();
  return R;
}

StatementResult verify_tmap_basics(const std::string& id,
                                   const std::vector<std::vector<i64>>& phi,
                                   const std::vector<i64>& moduli, const FusionRing& F) {
  Timer timer;
  StatementResult R{.id = id};
  auto reduce = [&](i64 v, std::size_t t) {
    const i64 m = moduli[t];
    if (m == 0) return v;
    i64 w = v % m;
    return w < 0 ? w + m : w;
  };
  const auto& unit = phi[static_cast<std::size_t>(F.unit)];
  for (std::size_t t = 0; t < moduli.size(); ++t)
    if (reduce(unit[t], t) != 0) {
      R.witness = json{{"reason", "phi(unit) != 0"}};
      R.seconds = timer.seconds();
      return R;
    }
  for (int i = 0; i < F.rank(); ++i) {
    const auto& a = phi[static_cast<std::size_t>(i)];
    const auto& b = phi[static_cast<std::size_t>(F.dual[static_cast<std::size_t>(i)])];
    for (std::size_t t = 0; t < moduli.size(); ++t)
      if (reduce(a[t] + b[t], t) != 0) {
        R.witness = json{{"reason", "phi(dual) != -phi"},
                         {"label", F.labels[static_cast<std::size_t>(i)]}};
        R.seconds = timer.seconds();
        return R;
      }
  }
  R.pass = true;
  R.seconds = timer.seconds();
  return R;
}

std::vector<std::vector<i64>> enumerate_tmaps(const ChainGroupPresentation& P,
                                              const FusionRing& F, i64 m) {
  if (m < 1) fail(ErrorKind::Input, "enumerate_tmaps: modulus must be >= 1");
  if (P.free_rank != 0)
    fail(ErrorKind::Internal, "enumerate_tmaps: expected a finite chain group");
  const int r = F.rank();
  const auto& factors = P.invariant_factors;

  // Hom(sum Z/f_t, Z/m): generator y_t goes to a multiple of m/gcd(f_t, m).
  std::vector<i64> gcds, steps;
  for (i64 f : factors) {
    const i64 g = gcd_i64(f, m);
    gcds.push_back(g);
    steps.push_back(m / g);
  }
  std::vector<std::vector<i64>> maps;
  std::vector<i64> choice(factors.size(), 0);
  for (;;) {
    std::vector<i64> phi(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
      i64 v = 0;
      for (std::size_t t = 0; t < factors.size(); ++t)
        v += P.projection[static_cast<std::size_t>(i)][t] * choice[t] % m * steps[t] % m;
      phi[static_cast<std::size_t>(i)] = ((v % m) + m) % m;
    }
    maps.push_back(std::move(phi));
    std::size_t t = 0;
    for (; t < factors.size(); ++t) {
      if (++choice[t] < gcds[t]) break;
      choice[t] = 0;
    }
    if (t == factors.size()) break;
  }

  // Re-verify each map against the raw t-map condition, independently of the
  // presentation it came from.
  for (const auto& phi : maps)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (const auto& [k, mult] : F.products(i, j)) {
          (void)mult;
          if ((phi[static_cast<std::size_t>(i)] + phi[static_cast<std::size_t>(j)]) % m !=
              phi[static_cast<std::size_t>(k)])
            fail(ErrorKind::Statement,
                 "enumerate_tmaps: presented homomorphism fails the raw t-map condition");
        }
  // Distinctness: distinct homomorphisms stay distinct on the labels.
  std::set<std::vector<i64>> distinct(maps.begin(), maps.end());
  if (distinct.size() != maps.size())
    fail(ErrorKind::Statement, "enumerate_tmaps: homomorphisms collide on the labels");
  return maps;
}

StatementResult verify_tmap_factorization(const GroupAnalysis& A, i64 m) {
  Timer timer;
  StatementResult R{.id = "tmap_factorization_m" + std::to_string(m)};
  if (!A.rG.is_surjective) {
    R.applicable = false;
    R.witness = json{{"reason", "restriction map not surjective; factorization vacuous"}};
    R.seconds = timer.seconds();
    return R;
  }
  const auto maps = enumerate_tmaps(A.chain, A.ring, m);

  i64 expected = 1;
  for (i64 f : A.chain.invariant_factors) expected *= gcd_i64(f, m);
  i64 expected_center = 1;
  for (i64 f : A.center.invariant_factors) expected_center *= gcd_i64(f, m);
  if (static_cast<i64>(maps.size()) != expected || expected != expected_center) {
    R.witness = json{{"reason", "t-map count mismatch"},
                     {"count", maps.size()},
                     {"expected_chain", expected},
                     {"expected_center", expected_center}};
    R.seconds = timer.seconds();
    return R;
  }

  const auto& moduli = A.center.invariant_factors;
  for (const auto& phi : maps) {
    // beta on the image of r_G: constant on fibers and beta(r_G) = phi.
    std::map<std::vector<i64>, i64> beta;
    for (int i = 0; i < A.ring.rank(); ++i) {
      const auto& key = A.rG.chars[static_cast<std::size_t>(i)].exponents;
      auto [it, inserted] = beta.emplace(key, phi[static_cast<std::size_t>(i)]);
      if (!inserted && it->second != phi[static_cast<std::size_t>(i)]) {
        R.witness = json{{"reason", "beta not constant on a fiber"},
                         {"label", A.ring.labels[static_cast<std::size_t>(i)]},
                         {"modulus", m}};
        R.seconds = timer.seconds();
        return R;
      }
    }
    // Surjectivity makes beta total on the dual; homomorphism over all pairs.
    for (const auto& [x, bx] : beta)
      for (const auto& [y, by] : beta) {
        const auto sum = central_character_add(CentralCharacter{x}, CentralCharacter{y}, moduli);
        auto it = beta.find(sum.exponents);
        if (it == beta.end() || it->second != (bx + by) % m) {
          R.witness = json{{"reason", "beta not a homomorphism"}, {"modulus", m}};
          R.seconds = timer.seconds();
          return R;
        }
      }
  }
  R.pass = true;
  R.seconds = timer.seconds();
  return R;
}

VerificationReport verify_group(const GroupAnalysis& A, const std::vector<i64>& moduli) {
  VerificationReport report;
  report.subject = A.group.name;
  report.statements.push_back(verify_chain_center_isomorphism(A));
  report.statements.push_back(verify_c0_center_triviality(A));
  report.statements.push_back(verify_projection_kernel_c0(A));

  std::vector<i64> proj_moduli = A.chain.invariant_factors;
  for (int t = 0; t < A.chain.free_rank; ++t) proj_moduli.push_back(0);
  report.statements.push_back(
      verify_tmap_basics("tmap_basics_projection", A.chain.projection, proj_moduli, A.ring));
  std::vector<std::vector<i64>> rg;
  for (const auto& c : A.rG.chars) rg.push_back(c.exponents);
  report.statements.push_back(
      verify_tmap_basics("tmap_basics_restriction", rg, A.center.invariant_factors, A.ring));
  {
    StatementResult R{.id = "restriction_is_tmap"};
    Timer timer;
    R.pass = A.rG.is_tmap;
    if (!R.pass) R.witness = json{{"reason", "restriction map violates tensor compatibility"}};
    R.seconds = timer.seconds();
    report.statements.push_back(std::move(R));
  }
  {
    StatementResult R{.id = "restriction_surjective"};
    Timer timer;
    R.pass = A.rG.is_surjective;
    if (!R.pass) R.witness = json{{"reason", "restriction map misses central characters"}};
    R.seconds = timer.seconds();
    report.statements.push_back(std::move(R));
  }
  {
    StatementResult R{.id = "definition_equivalence"};
    Timer timer;
    R.pass = compare_chain_groups(A.chain, A.chain_classes);
    if (!R.pass)
      R.witness = json{{"reason", "presentation and class partition disagree"},
                       {"invariant_factors", A.chain.invariant_factors},
                       {"class_count", A.chain_classes.class_count}};
    R.seconds = timer.seconds();
    report.statements.push_back(std::move(R));
  }
  for (i64 m : moduli) report.statements.push_back(verify_tmap_factorization(A, m));
  return report;
}

VerificationReport verify_fusion_ring_statements(const FusionRing& F,
                                                 const ChainGroupPresentation& chain,
                                                 const ChainClassPartition& classes,
                                                 const std::vector<i64>& moduli) {
  VerificationReport report;
  report.subject = "fusion-ring";
  std::vector<i64> proj_moduli = chain.invariant_factors;
  for (int t = 0; t < chain.free_rank; ++t) proj_moduli.push_back(0);
  report.statements.push_back(
      verify_tmap_basics("tmap_basics_projection", chain.projection, proj_moduli, F));
  {
    StatementResult R{.id = "definition_equivalence"};
    Timer timer;
    R.pass = compare_chain_groups(chain, classes);
    if (!R.pass) R.witness = json{{"reason", "presentation and class partition disagree"}};
    R.seconds = timer.seconds();
    report.statements.push_back(std::move(R));
  }
  for (i64 m : moduli) {
    StatementResult R{.id = "tmap_count_m" + std::to_string(m)};
    Timer timer;
    if (chain.free_rank != 0) {
      R.applicable = false;
      R.witness = json{{"reason", "chain group has free rank; finite enumeration does not apply"}};
    } else {
      const auto maps = enumerate_tmaps(chain, F, m);
      i64 expected = 1;
      for (i64 f : chain.invariant_factors) expected *= gcd_i64(f, m);
      R.pass = static_cast<i64>(maps.size()) == expected;
      if (!R.pass)
        R.witness = json{{"reason", "t-map count mismatch"},
                         {"count", maps.size()},
                         {"expected", expected}};
    }
    R.seconds = timer.seconds();
    report.statements.push_back(std::move(R));
  }
  // Center-side statements are not applicable without a group.
  for (const char* id : {"chain_center_isomorphism", "c0_equals_center_trivial",
                         "chain_kernel_equals_c0", "restriction_is_tmap", "restriction_surjective"}) {
    StatementResult R{.id = id};
    R.applicable = false;
    R.pass = false;
    R.witness = json{{"reason", "requires a group-derived ring"}};
    report.statements.push_back(std::move(R));
  }
  return report;
}

}  // namespace cgt
