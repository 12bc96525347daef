#pragma once
#include <string>
#include <vector>

#include "json.hpp"

#include "cgt/common.hpp"

namespace cgt {

struct CatalogEntry {
  std::string name;
  nlohmann::json spec;
  i64 order = 0;
};

// Built-in groups: cyclic, dihedral, dicyclic, symmetric, alternating,
// klein4, sl23, and a handful of direct products. Sorted by order, then name.
const std::vector<CatalogEntry>& builtin_catalog();

// The dihedral(4l) / dicyclic(2l) pairs of common order 8l, l = 1..6.
struct DQPair {
  int l;
  CatalogEntry dihedral;
  CatalogEntry dicyclic;
};
std::vector<DQPair> dq_pairs();

}  // namespace cgt
