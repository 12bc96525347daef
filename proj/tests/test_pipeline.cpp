#include <cstdio>
#include <filesystem>

#include "doctest.h"

#include "cgt/verify.hpp"

using namespace cgt;

namespace {

nlohmann::json analysis_fingerprint(const GroupAnalysis& A) {
  nlohmann::json tensor = nlohmann::json::object();
  for (int i = 0; i < A.ring.rank(); ++i)
    for (int j = 0; j < A.ring.rank(); ++j) {
      nlohmann::json entry = nlohmann::json::object();
      for (const auto& [k, m] : A.ring.products(i, j))
        entry[A.ring.labels[static_cast<std::size_t>(k)]] = m;
      if (!entry.empty())
        tensor[A.ring.labels[static_cast<std::size_t>(i)] + "," +
               A.ring.labels[static_cast<std::size_t>(j)]] = std::move(entry);
    }
  nlohmann::json chars = nlohmann::json::object();
  for (int i = 0; i < A.ring.rank(); ++i)
    chars[A.ring.labels[static_cast<std::size_t>(i)]] = A.rG.chars[static_cast<std::size_t>(i)].exponents;
  return nlohmann::json{{"labels", A.ring.labels},
                        {"degrees", A.ring.degrees},
                        {"tensor", std::move(tensor)},
                        {"r_G", std::move(chars)},
                        {"chain", A.chain.invariant_factors},
                        {"ab_dual", A.ab_dual}};
}

}  // namespace

TEST_CASE("alpha suffixes") {
  CHECK(alpha_suffix(0) == "a");
  CHECK(alpha_suffix(25) == "z");
  CHECK(alpha_suffix(26) == "aa");
  CHECK(alpha_suffix(27) == "ab");
  CHECK(alpha_suffix(52) == "ba");
}

TEST_CASE("canonical labels") {
  GroupAnalysis s3 = analyze_group(make_named_group("symmetric", {3}));
  CHECK(s3.ring.labels == std::vector<std::string>({"1a", "1b", "2a"}));
  CHECK(s3.ring.unit == 0);

  GroupAnalysis q8 = analyze_group(make_named_group("dicyclic", {2}));
  CHECK(q8.ring.labels == std::vector<std::string>({"1a", "1b", "1c", "1d", "2a"}));
}

TEST_CASE("analysis is deterministic") {
  GroupAnalysis a = analyze_group(make_named_group("dicyclic", {3}));
  GroupAnalysis b = analyze_group(make_named_group("dicyclic", {3}));
  CHECK(analysis_fingerprint(a) == analysis_fingerprint(b));
  CHECK(a.table.values == b.table.values);
}

TEST_CASE("two qualifying primes produce identical lifted data") {
  for (const char* spec : {"symmetric:3", "dicyclic:2", "dihedral:4", "alternating:4", "cyclic:5",
                           "cyclic:6", "dihedral:6", "sl23", "dicyclic:3", "klein4",
                           "dihedral:8", "symmetric:4"}) {
    FiniteGroup G = group_from_spec_string(spec);
    const i64 e = group_exponent(G);
    AnalysisOptions first;  // default prime
    GroupAnalysis A = analyze_group(G, first);
    AnalysisOptions second;
    second.prime = next_qualifying_prime(G.order(), e, A.table.p);
    GroupAnalysis B = analyze_group(G, second);
    REQUIRE(A.table.p != B.table.p);
    INFO(spec);
    CHECK(analysis_fingerprint(A) == analysis_fingerprint(B));
  }
}

TEST_CASE("cache round trip is byte-identical") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cgt_cache_test";
  fs::remove_all(dir);

  AnalysisOptions opt;
  opt.cache_dir = dir.string();
  GroupAnalysis cold = analyze_group(make_named_group("dicyclic", {4}), opt);
  CHECK(!cold.from_cache);
  GroupAnalysis warm = analyze_group(make_named_group("dicyclic", {4}), opt);
  CHECK(warm.from_cache);

  CHECK(table_to_json(cold.table).dump() == table_to_json(warm.table).dump());
  CHECK(fusion_to_json(cold.ring).dump() == fusion_to_json(warm.ring).dump());
  CHECK(analysis_fingerprint(cold).dump() == analysis_fingerprint(warm).dump());
  auto report_cold = presentation_report_json(cold.chain, &cold.chain_classes, std::nullopt);
  auto report_warm = presentation_report_json(warm.chain, &warm.chain_classes, std::nullopt);
  CHECK(report_cold.dump() == report_warm.dump());
  // verification is recomputed either way and its JSON carries no timings
  CHECK(verify_group(cold, {2, 3, 4}).to_json().dump() ==
        verify_group(warm, {2, 3, 4}).to_json().dump());
  fs::remove_all(dir);
}

TEST_CASE("cache keys separate specs and primes") {
  auto s1 = nlohmann::json{{"type", "named"}, {"name", "cyclic"}, {"params", {4}}};
  auto s2 = nlohmann::json{{"type", "named"}, {"name", "cyclic"}, {"params", {5}}};
  CHECK(cache_key(s1, 0) != cache_key(s2, 0));
  CHECK(cache_key(s1, 0) != cache_key(s1, 17));
}

TEST_CASE("canonical order handles conjugate pairs deterministically") {
  // A_4 has a complex-conjugate pair of 1-dim irreps; the canonical tensor
  // must come out the same whichever representative leads.
  GroupAnalysis a = analyze_group(make_named_group("alternating", {4}));
  CHECK(a.ring.labels == std::vector<std::string>({"1a", "1b", "1c", "3a"}));
  AnalysisOptions opt;
  opt.prime = next_qualifying_prime(12, group_exponent(make_named_group("alternating", {4})), a.table.p);
  GroupAnalysis b = analyze_group(make_named_group("alternating", {4}), opt);
  CHECK(analysis_fingerprint(a) == analysis_fingerprint(b));
}
