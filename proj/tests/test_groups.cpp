#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "cgt/groups.hpp"

using namespace cgt;

namespace {

// Independent oracle: conjugacy partition by scanning all conjugators.
std::vector<std::set<int>> conjugacy_oracle(const FiniteGroup& G) {
  const int n = static_cast<int>(G.elements.size());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::set<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] != -1) continue;
    std::set<int> orbit;
    for (int g = 0; g < n; ++g) {
      const Perm& pg = G.elements[static_cast<std::size_t>(g)];
      const Perm conj = perm_mul(perm_mul(perm_inv(pg), G.elements[static_cast<std::size_t>(x)]), pg);
      orbit.insert(G.index_of(conj));
    }
    for (int e : orbit) cls[static_cast<std::size_t>(e)] = static_cast<int>(classes.size());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

// Independent oracle: center by commutation with every element.
std::set<int> center_oracle(const FiniteGroup& G) {
  std::set<int> z;
  for (std::size_t a = 0; a < G.elements.size(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < G.elements.size() && central; ++b)
      central = perm_mul(G.elements[a], G.elements[b]) == perm_mul(G.elements[b], G.elements[a]);
    if (central) z.insert(static_cast<int>(a));
  }
  return z;
}

FiniteGroup s3() {
  return FiniteGroup::from_generators(3, {perm_from_cycles(3, {{0, 1}}), perm_from_cycles(3, {{0, 1, 2}})});
}

}  // namespace

TEST_CASE("named group orders") {
  CHECK(make_named_group("cyclic", {6}).order() == 6);
  CHECK(make_named_group("dihedral", {4}).order() == 8);
  CHECK(make_named_group("dicyclic", {2}).order() == 8);
  CHECK(make_named_group("symmetric", {4}).order() == 24);
  CHECK(make_named_group("alternating", {5}).order() == 60);
  CHECK(make_named_group("klein4", {}).order() == 4);
  CHECK(make_named_group("sl23", {}).order() == 24);
  CHECK(make_named_group("dihedral", {1}).order() == 2);
  CHECK(make_named_group("dihedral", {2}).order() == 4);
  CHECK(make_named_group("dicyclic", {1}).order() == 4);
  CHECK(make_named_group("alternating", {2}).order() == 1);
}

TEST_CASE("dicyclic(2) is the quaternion group") {
  FiniteGroup Q8 = make_named_group("dicyclic", {2});
  REQUIRE(Q8.order() == 8);
  // Unique element of order 2.
  int order2 = 0;
  for (int e = 0; e < 8; ++e)
    if (Q8.element_order(e) == 2) ++order2;
  CHECK(order2 == 1);
  // Exponent 4: element orders are 1, 2, 4.
  CHECK(group_exponent(Q8) == 4);
}

TEST_CASE("dicyclic(1) is cyclic of order 4") {
  FiniteGroup G = make_named_group("dicyclic", {1});
  CHECK(G.order() == 4);
  CHECK(group_exponent(G) == 4);
}

TEST_CASE("BFS enumeration is deterministic with identity first") {
  FiniteGroup G = s3();
  REQUIRE(G.order() == 6);
  CHECK(perm_is_identity(G.elements[0]));
  FiniteGroup H = s3();
  CHECK(G.elements == H.elements);
}

TEST_CASE("element products via product_row match direct composition") {
  for (const char* spec : {"dicyclic:3", "symmetric:4", "sl23"}) {
    FiniteGroup G = group_from_spec_string(spec);
    std::vector<int> row;
    for (int x = 0; x < G.order(); x += 3) {
      G.product_row(x, row);
      for (int y = 0; y < G.order(); y += 5)
        CHECK(row[static_cast<std::size_t>(y)] == G.multiply(x, y));
    }
  }
}

TEST_CASE("conjugacy classes of S_3") {
  FiniteGroup G = s3();
  auto P = conjugacy_classes(G);
  REQUIRE(P.count() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& c : P.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("conjugacy classes match the all-conjugators oracle") {
  for (const char* spec : {"symmetric:3", "dicyclic:2", "alternating:4", "dihedral:6", "sl23"}) {
    FiniteGroup G = group_from_spec_string(spec);
    auto P = conjugacy_classes(G);
    auto oracle = conjugacy_oracle(G);
    REQUIRE(P.count() == static_cast<int>(oracle.size()));
    std::set<std::set<int>> got, want;
    for (const auto& c : P.classes) got.insert(std::set<int>(c.begin(), c.end()));
    for (const auto& c : oracle) want.insert(c);
    CHECK(got == want);
  }
}

TEST_CASE("abelian groups have singleton classes") {
  FiniteGroup G = make_named_group("cyclic", {9});
  auto P = conjugacy_classes(G);
  CHECK(P.count() == 9);
  for (const auto& c : P.classes) CHECK(c.size() == 1);
}

TEST_CASE("dicyclic(2) has 5 conjugacy classes") {
  CHECK(conjugacy_classes(make_named_group("dicyclic", {2})).count() == 5);
}

TEST_CASE("class equation and inverse-class involution") {
  for (const char* spec : {"symmetric:4", "dicyclic:4", "dihedral:7", "sl23", "alternating:5"}) {
    FiniteGroup G = group_from_spec_string(spec);
    auto P = conjugacy_classes(G);
    i64 total = 0;
    for (const auto& c : P.classes) {
      total += static_cast<i64>(c.size());
      CHECK(G.order() % static_cast<i64>(c.size()) == 0);
    }
    CHECK(total == G.order());
    CHECK(P.classes[0] == std::vector<int>{0});
    for (int c = 0; c < P.count(); ++c) {
      CHECK(P.inverse_class[static_cast<std::size_t>(P.inverse_class[static_cast<std::size_t>(c)])] == c);
      CHECK(P.classes[static_cast<std::size_t>(c)].size() ==
            P.classes[static_cast<std::size_t>(P.inverse_class[static_cast<std::size_t>(c)])].size());
    }
    CHECK(P.inverse_class[0] == 0);
  }
}

TEST_CASE("center against the all-elements oracle") {
  for (const char* spec : {"symmetric:3", "dicyclic:2", "dihedral:8", "sl23", "cyclic:10"}) {
    FiniteGroup G = group_from_spec_string(spec);
    auto z = center_elements(G);
    CHECK(std::set<int>(z.begin(), z.end()) == center_oracle(G));
  }
}

TEST_CASE("center equals the union of singleton classes") {
  for (const char* spec : {"dicyclic:4", "dihedral:6", "sl23", "symmetric:4"}) {
    FiniteGroup G = group_from_spec_string(spec);
    auto P = conjugacy_classes(G);
    std::set<int> singletons;
    for (const auto& c : P.classes)
      if (c.size() == 1) singletons.insert(c[0]);
    auto z = center_elements(G);
    CHECK(std::set<int>(z.begin(), z.end()) == singletons);
  }
}

TEST_CASE("center sizes") {
  CHECK(center_elements(s3()).size() == 1);
  CHECK(center_elements(make_named_group("dicyclic", {2})).size() == 2);
  CHECK(center_elements(make_named_group("cyclic", {7})).size() == 7);
}

TEST_CASE("exponent") {
  CHECK(group_exponent(s3()) == 6);
  CHECK(group_exponent(make_named_group("cyclic", {12})) == 12);
  CHECK(group_exponent(make_named_group("dicyclic", {2})) == 4);
}

TEST_CASE("direct products") {
  FiniteGroup c2xc3 = direct_product(make_named_group("cyclic", {2}), make_named_group("cyclic", {3}));
  CHECK(c2xc3.order() == 6);
  CHECK(group_exponent(c2xc3) == 6);

  FiniteGroup k4 = direct_product(make_named_group("cyclic", {2}), make_named_group("cyclic", {2}));
  CHECK(k4.order() == 4);
  CHECK(group_exponent(k4) == 2);

  FiniteGroup s3c2 = direct_product(s3(), make_named_group("cyclic", {2}));
  CHECK(s3c2.order() == 12);

  // center of a product is the product of centers
  FiniteGroup q8c3 = direct_product(make_named_group("dicyclic", {2}), make_named_group("cyclic", {3}));
  CHECK(center_elements(q8c3).size() == 6);
  CHECK(center_oracle(q8c3).size() == 6);
}

TEST_CASE("order bound is enforced") {
  CHECK_THROWS_AS(make_named_group("cyclic", {100}, 50), Error);
  CHECK_THROWS_AS(make_named_group("symmetric", {8}, 10000), Error);
  try {
    make_named_group("cyclic", {100}, 50);
    FAIL("expected a bound error");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::Bound);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(make_named_group("frobnicate", {3}), Error);
  CHECK_THROWS_AS(make_named_group("cyclic", {0}), Error);
  CHECK_THROWS_AS(make_named_group("cyclic", {}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_generators(3, {{0, 0, 1}}), Error);
}

TEST_CASE("group spec JSON and shorthand") {
  auto spec = nlohmann::json{{"type", "permutation"},
                             {"degree", 3},
                             {"generators", {{1, 0, 2}, {1, 2, 0}}}};
  CHECK(group_from_json(spec).order() == 6);

  auto named = nlohmann::json{{"type", "named"}, {"name", "dicyclic"}, {"params", {6}}};
  CHECK(group_from_json(named).order() == 24);

  auto prod = nlohmann::json{{"type", "product"}, {"factors", {named, named}}};
  CHECK(group_from_json(prod).order() == 576);

  CHECK(group_from_spec_string("dicyclic:6").order() == 24);
  CHECK(group_from_spec_string("klein4").order() == 4);
  CHECK(group_from_spec_string(spec.dump()).order() == 6);
  CHECK_THROWS_AS(group_from_spec_string("{bad json"), Error);
}
