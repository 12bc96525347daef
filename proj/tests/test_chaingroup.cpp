#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "cgt/chaingroup.hpp"
#include "cgt/pipeline.hpp"

using namespace cgt;

namespace {

FusionRing group_ring(const std::string& spec) {
  FiniteGroup G = group_from_spec_string(spec);
  auto P = conjugacy_classes(G);
  auto C = class_algebra_constants(G, P);
  auto T = character_table_mod_p(G, P, C);
  return fusion_from_character_table(T, P, G.order());
}

std::string data_path(const char* name) { return std::string(CGT_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("chain group of Z/n group rings is Z/n") {
  for (int n : {3, 5, 6, 8}) {
    FusionRing F = group_ring("cyclic:" + std::to_string(n));
    auto P = chain_group_snf(F);
    CHECK(P.invariant_factors == std::vector<i64>{n});
    CHECK(P.free_rank == 0);
  }
}

TEST_CASE("chain group of S_3 is trivial") {
  auto P = chain_group_snf(group_ring("symmetric:3"));
  CHECK(P.invariant_factors.empty());
  CHECK(P.free_rank == 0);
  for (int i = 0; i < 3; ++i) CHECK(P.projection_is_zero(i));
}

TEST_CASE("chain group of the Ising ring is Z/2") {
  FusionRing F = fusion_from_file(data_path("ising.json"));
  auto P = chain_group_snf(F);
  CHECK(P.invariant_factors == std::vector<i64>{2});
  CHECK(P.free_rank == 0);
  // eps is forced equal to 1, sigma generates
  CHECK(P.projection_is_zero(F.label_index("1")));
  CHECK(P.projection_is_zero(F.label_index("eps")));
  CHECK(!P.projection_is_zero(F.label_index("sigma")));
}

TEST_CASE("projection is tensor-compatible on every relation") {
  FusionRing F = group_ring("dicyclic:4");
  auto P = chain_group_snf(F);
  const auto& factors = P.invariant_factors;
  for (int i = 0; i < F.rank(); ++i)
    for (int j = 0; j < F.rank(); ++j)
      for (const auto& [k, m] : F.products(i, j)) {
        (void)m;
        for (std::size_t t = 0; t < factors.size(); ++t) {
          const i64 sum = P.projection[static_cast<std::size_t>(i)][t] +
                          P.projection[static_cast<std::size_t>(j)][t];
          CHECK((sum - P.projection[static_cast<std::size_t>(k)][t]) % factors[t] == 0);
        }
      }
}

TEST_CASE("chain classes of S_3 collapse to one class") {
  auto B = chain_equivalence_classes(group_ring("symmetric:3"));
  CHECK(B.class_count == 1);
  CHECK(B.product_table[0][0] == 0);
}

TEST_CASE("chain classes of Q_8: 1-dims vs the 2-dim") {
  FusionRing F = group_ring("dicyclic:2");
  auto B = chain_equivalence_classes(F);
  REQUIRE(B.class_count == 2);
  std::map<int, std::set<i64>> degrees_by_class;
  for (int i = 0; i < F.rank(); ++i)
    degrees_by_class[B.class_of[static_cast<std::size_t>(i)]].insert(
        F.degrees[static_cast<std::size_t>(i)]);
  for (const auto& [cls, degs] : degrees_by_class) CHECK(degs.size() == 1);
  // group structure Z/2
  CHECK(class_group_structure(B) == std::vector<i64>{2});
}

TEST_CASE("chain classes of the Z/3 ring are singletons with a cyclic table") {
  FusionRing F = fusion_from_file(data_path("z3.json"));
  auto B = chain_equivalence_classes(F);
  REQUIRE(B.class_count == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      // product table mirrors the ring itself
      const int k = F.products(a, b)[0].first;
      CHECK(B.product_table[static_cast<std::size_t>(B.class_of[static_cast<std::size_t>(a)])]
                           [static_cast<std::size_t>(B.class_of[static_cast<std::size_t>(b)])] ==
            B.class_of[static_cast<std::size_t>(k)]);
    }
  CHECK(class_group_structure(B) == std::vector<i64>{3});
}

TEST_CASE("class group structure of the trivial partition is empty") {
  auto B = chain_equivalence_classes(group_ring("symmetric:4"));
  CHECK(B.class_count == 1);
  CHECK(class_group_structure(B).empty());
}

TEST_CASE("Z/6 file ring: class group [6]") {
  FusionRing F = fusion_from_file(data_path("z6.json"));
  auto B = chain_equivalence_classes(F);
  CHECK(B.class_count == 6);
  CHECK(class_group_structure(B) == std::vector<i64>{6});
}

TEST_CASE("class partition requires commutativity") {
  FusionRing F = group_ring("symmetric:3");
  F.commutative = false;
  CHECK_THROWS_AS(chain_equivalence_classes(F), Error);
}

TEST_CASE("compare_chain_groups on matched and doctored data") {
  for (const char* spec : {"symmetric:3", "dicyclic:2", "cyclic:6", "sl23"}) {
    FusionRing F = group_ring(spec);
    auto A = chain_group_snf(F);
    auto B = chain_equivalence_classes(F);
    CHECK(compare_chain_groups(A, B));
    if (B.class_count >= 2) {
      // deliberately permuted class map: pushing one label into another
      // class breaks the fiber correspondence (a global relabeling would not)
      auto doctored = B;
      std::size_t b = 0;
      for (std::size_t i = 0; i < doctored.class_of.size(); ++i)
        if (doctored.class_of[i] != doctored.class_of[0]) b = i;
      doctored.class_of[b] = doctored.class_of[0];
      CHECK(!compare_chain_groups(A, doctored));
    }
  }
  // Ising and Z/n file fixtures
  for (const char* file : {"ising.json", "z3.json", "z6.json"}) {
    FusionRing F = fusion_from_file(data_path(file));
    CHECK(compare_chain_groups(chain_group_snf(F), chain_equivalence_classes(F)));
  }
}

TEST_CASE("su2 truncation: factors [2] at every level, stabilized") {
  auto R = truncated_chain_group(su2_fusion_oracle(), 5);
  REQUIRE(R.levels.size() == 5);
  for (const auto& L : R.levels) {
    CHECK(L.presentation.invariant_factors == std::vector<i64>{2});
    CHECK(L.presentation.free_rank == 0);
    // classes = even vs odd doubled spins
    std::map<std::vector<i64>, std::set<i64>> fibers;
    for (std::size_t t = 0; t < L.window.size(); ++t)
      fibers[L.presentation.projection[t]].insert(L.window[t] % 2);
    for (const auto& [proj, parities] : fibers) CHECK(parities.size() == 1);
  }
  CHECK(R.stabilized.has_value());
  CHECK(*R.stabilized);
}

TEST_CASE("su2 truncation at level 1") {
  auto R = truncated_chain_group(su2_fusion_oracle(), 1);
  REQUIRE(R.levels.size() == 1);
  CHECK(R.levels[0].presentation.generator_labels == std::vector<std::string>{"0", "1"});
  CHECK(R.levels[0].presentation.invariant_factors == std::vector<i64>{2});
  CHECK(!R.stabilized.has_value());
}

TEST_CASE("lazily presented Z/4 oracle gives [4] at any level") {
  FusionRing z4 = group_ring("cyclic:4");
  FusionOracle O = oracle_from_ring(z4);
  for (i64 L : {1, 2, 5}) {
    auto R = truncated_chain_group(O, L);
    for (const auto& lvl : R.levels)
      CHECK(lvl.presentation.invariant_factors == std::vector<i64>{4});
  }
}

TEST_CASE("truncation input validation") {
  CHECK_THROWS_AS(truncated_chain_group(su2_fusion_oracle(), 0), Error);
}

TEST_CASE("presentation report JSON schema") {
  FusionRing F = fusion_from_file(data_path("ising.json"));
  auto A = chain_group_snf(F);
  auto B = chain_equivalence_classes(F);
  auto j = presentation_report_json(A, &B, std::nullopt);
  CHECK(j.at("invariant_factors") == nlohmann::json::array({2}));
  CHECK(j.at("free_rank") == 0);
  CHECK(j.at("stabilized").is_null());
  CHECK(j.at("classes").at("1") == j.at("classes").at("eps"));
  CHECK(j.at("classes").at("1") != j.at("classes").at("sigma"));
  // round trip through the parser
  auto reparsed = nlohmann::json::parse(j.dump());
  CHECK(reparsed == j);
}
