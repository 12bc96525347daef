#include "cgt/catalog.hpp"

#include <algorithm>

namespace cgt {

using nlohmann::json;

namespace {

json named(const std::string& name, std::vector<i64> params = {}) {
  return json{{"type", "named"}, {"name", name}, {"params", params}};
}

json product(std::vector<json> factors) {
  return json{{"type", "product"}, {"factors", factors}};
}

i64 factorial(i64 n) {
  i64 f = 1;
  for (i64 k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string name, json spec, i64 order) {
    entries.push_back({std::move(name), std::move(spec), order});
  };

  for (i64 m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 24, 27, 30, 32, 36, 48, 60, 64, 100, 128})
    add("cyclic" + std::to_string(m), named("cyclic", {m}), m);
  for (i64 m : {3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 20, 24, 32, 48, 64, 128, 256})
    add("dihedral" + std::to_string(m), named("dihedral", {m}), 2 * m);
  for (i64 m : {1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 16, 24, 32, 64, 128})
    add("dicyclic" + std::to_string(m), named("dicyclic", {m}), 4 * m);
  for (i64 n : {2, 3, 4, 5, 6}) add("symmetric" + std::to_string(n), named("symmetric", {n}), factorial(n));
  for (i64 n : {3, 4, 5, 6}) add("alternating" + std::to_string(n), named("alternating", {n}), factorial(n) / 2);
  add("klein4", named("klein4"), 4);
  add("sl23", named("sl23"), 24);

  add("klein4xcyclic3", product({named("klein4"), named("cyclic", {3})}), 12);
  add("cyclic2xcyclic2xcyclic2", product({named("cyclic", {2}), named("cyclic", {2}), named("cyclic", {2})}), 8);
  add("symmetric3xcyclic2", product({named("symmetric", {3}), named("cyclic", {2})}), 12);
  add("symmetric3xsymmetric3", product({named("symmetric", {3}), named("symmetric", {3})}), 36);
  add("dicyclic2xcyclic3", product({named("dicyclic", {2}), named("cyclic", {3})}), 24);
  add("dihedral4xcyclic2", product({named("dihedral", {4}), named("cyclic", {2})}), 16);
  add("symmetric4xcyclic2", product({named("symmetric", {4}), named("cyclic", {2})}), 48);
  add("alternating4xcyclic4", product({named("alternating", {4}), named("cyclic", {4})}), 48);
  add("dicyclic2xdicyclic2", product({named("dicyclic", {2}), named("dicyclic", {2})}), 64);
  add("dihedral5xcyclic5", product({named("dihedral", {5}), named("cyclic", {5})}), 50);
  add("sl23xcyclic2", product({named("sl23"), named("cyclic", {2})}), 48);

  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = build();
  return catalog;
}

std::vector<DQPair> dq_pairs() {
  std::vector<DQPair> pairs;
  for (int l = 1; l <= 6; ++l) {
    DQPair p;
    p.l = l;
    p.dihedral = {"dihedral" + std::to_string(4 * l), named("dihedral", {4 * l}), 8ll * l};
    p.dicyclic = {"dicyclic" + std::to_string(2 * l), named("dicyclic", {2 * l}), 8ll * l};
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace cgt
