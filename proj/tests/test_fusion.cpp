#include <algorithm>
#include <set>

#include "doctest.h"

#include "cgt/fusion.hpp"

using namespace cgt;

namespace {

FusionRing group_ring(const std::string& spec) {
  FiniteGroup G = group_from_spec_string(spec);
  auto P = conjugacy_classes(G);
  auto C = class_algebra_constants(G, P);
  auto T = character_table_mod_p(G, P, C);
  return fusion_from_character_table(T, P, G.order());
}

int index_of_degree(const FusionRing& F, i64 degree) {
  for (int i = 0; i < F.rank(); ++i)
    if (F.degrees[static_cast<std::size_t>(i)] == degree) return i;
  FAIL("no label of requested degree");
  return -1;
}

std::string data_path(const char* name) { return std::string(CGT_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("S_3 fusion: std (x) std = 1 + sgn + std") {
  FusionRing F = group_ring("symmetric:3");
  REQUIRE(F.rank() == 3);
  const int std_idx = index_of_degree(F, 2);
  int sgn_idx = -1;
  for (int i = 0; i < 3; ++i)
    if (i != F.unit && F.degrees[static_cast<std::size_t>(i)] == 1) sgn_idx = i;
  REQUIRE(sgn_idx != -1);
  const auto& out = F.products(std_idx, std_idx);
  REQUIRE(out.size() == 3);
  for (const auto& [k, m] : out) {
    (void)k;
    CHECK(m == 1);
  }
  std::set<int> constituents;
  for (const auto& [k, m] : out) constituents.insert(k);
  CHECK(constituents == std::set<int>{F.unit, sgn_idx, std_idx});
}

TEST_CASE("unit laws hold in group rings") {
  FusionRing F = group_ring("dicyclic:3");
  for (int j = 0; j < F.rank(); ++j) {
    const auto& out = F.products(F.unit, j);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == std::pair<int, i64>{j, 1});
  }
}

TEST_CASE("Q_8: square of the 2-dim irrep is the sum of the four 1-dims") {
  FusionRing F = group_ring("dicyclic:2");
  REQUIRE(F.rank() == 5);
  const int two = index_of_degree(F, 2);
  const auto& out = F.products(two, two);
  REQUIRE(out.size() == 4);
  for (const auto& [k, m] : out) {
    CHECK(F.degrees[static_cast<std::size_t>(k)] == 1);
    CHECK(m == 1);
  }
}

TEST_CASE("dimension homomorphism and symmetry on catalog rings") {
  for (const char* spec : {"symmetric:4", "dicyclic:4", "sl23", "alternating:4", "dihedral:9"}) {
    FusionRing F = group_ring(spec);
    CHECK(F.commutative);
    for (int i = 0; i < F.rank(); ++i)
      for (int j = 0; j < F.rank(); ++j) {
        CHECK(F.products(i, j) == F.products(j, i));
        i64 sum = 0;
        for (const auto& [k, m] : F.products(i, j))
          sum += m * F.degrees[static_cast<std::size_t>(k)];
        CHECK(sum == F.degrees[static_cast<std::size_t>(i)] * F.degrees[static_cast<std::size_t>(j)]);
      }
  }
}

TEST_CASE("associativity scan: parallel kernel equals the serial reference") {
  for (const char* spec : {"symmetric:4", "dicyclic:6"}) {
    FusionRing F = group_ring(spec);
    CHECK(associativity_violations(F).empty());
    CHECK(associativity_violations_serial(F).empty());
  }
}

TEST_CASE("fusion tensor: parallel kernel equals the serial reference") {
  FiniteGroup G = make_named_group("dihedral", {12});
  auto P = conjugacy_classes(G);
  auto C = class_algebra_constants(G, P);
  auto T = character_table_mod_p(G, P, C);
  FusionRing a = fusion_from_character_table(T, P, G.order(), true);
  FusionRing b = fusion_from_character_table(T, P, G.order(), false);
  CHECK(a.N == b.N);
  CHECK(a.dual == b.dual);
}

TEST_CASE("validation catches constructed violations") {
  // Ising with eps*eps = eps injected: unit/duality axioms break.
  nlohmann::json bad{{"labels", {"1", "eps", "sigma"}},
                     {"unit", "1"},
                     {"dual", {{"1", "1"}, {"eps", "eps"}, {"sigma", "sigma"}}},
                     {"commutative", true},
                     {"tensor",
                      {{"sigma,sigma", {{"1", 1}, {"eps", 1}}},
                       {"eps,eps", {{"eps", 1}}},
                       {"eps,sigma", {{"sigma", 1}}}}}};
  CHECK_THROWS_WITH_AS(fusion_from_json(bad), doctest::Contains("duality"), Error);
}

TEST_CASE("fusion files") {
  FusionRing ising = fusion_from_file(data_path("ising.json"));
  CHECK(ising.rank() == 3);
  CHECK(ising.commutative);
  const int sigma = ising.label_index("sigma");
  const int eps = ising.label_index("eps");
  CHECK(ising.mult(sigma, sigma, ising.unit) == 1);
  CHECK(ising.mult(sigma, sigma, eps) == 1);
  CHECK(validate_fusion_ring(ising).empty());

  FusionRing z3 = fusion_from_file(data_path("z3.json"));
  CHECK(z3.rank() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(z3.products(i, j).size() == 1);

  CHECK_THROWS_WITH_AS(fusion_from_file(data_path("broken_assoc.json")),
                       doctest::Contains("associativity"), Error);
  CHECK_THROWS_AS(fusion_from_file(data_path("missing.json")), Error);
}

TEST_CASE("fusion file errors") {
  nlohmann::json missing_pair{{"labels", {"1", "a", "b"}},
                              {"unit", "1"},
                              {"dual", {{"1", "1"}, {"a", "b"}, {"b", "a"}}},
                              {"tensor", {{"a,b", {{"1", 1}}}}}};
  // without commutative closure, b,a (and a,a / b,b) are unlisted
  CHECK_THROWS_WITH_AS(fusion_from_json(missing_pair), doctest::Contains("not listed"), Error);
}

TEST_CASE("fusion JSON round trip") {
  FusionRing F = group_ring("dicyclic:2");
  FusionRing G = fusion_from_json(fusion_to_json(F));
  CHECK(F.labels == G.labels);
  CHECK(F.N == G.N);
  CHECK(F.dual == G.dual);
  CHECK(F.degrees == G.degrees);
}

TEST_CASE("su2 oracle follows the Clebsch-Gordan rule") {
  FusionOracle O = su2_fusion_oracle();
  CHECK(O.product(1, 1) == std::vector<i64>{0, 2});
  CHECK(O.product(2, 3) == std::vector<i64>{1, 3, 5});
  CHECK(O.product(0, 7) == std::vector<i64>{7});
  CHECK(O.product(7, 0) == std::vector<i64>{7});
  CHECK(O.dual(5) == 5);
  CHECK(O.labels_up_to_level(3) == std::vector<i64>{0, 1, 2, 3});
}

TEST_CASE("oracle view of a finite ring") {
  FusionRing z3 = fusion_from_file(data_path("z3.json"));
  FusionOracle O = oracle_from_ring(z3);
  CHECK(O.labels_up_to_level(1).size() == 3);
  CHECK(O.labels_up_to_level(5).size() == 3);
  CHECK(O.product(1, 2) == std::vector<i64>{0});
  CHECK(O.level(O.unit) == 0);
}
