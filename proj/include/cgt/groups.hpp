#pragma once
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "cgt/perm.hpp"

namespace cgt {

constexpr i64 kDefaultOrderBound = 10000;

// A finite permutation group with its element list fully enumerated.
// Elements are stored in breadth-first closure order (identity first), which
// fixes a deterministic element numbering used everywhere downstream.
class FiniteGroup {
 public:
  static FiniteGroup from_generators(int degree, std::vector<Perm> generators,
                                     i64 order_bound = kDefaultOrderBound,
                                     std::string name = "permutation");

  int degree = 1;
  std::string name = "permutation";
  nlohmann::json spec;  // canonical spec this group was built from
  std::vector<Perm> generators;
  std::vector<Perm> elements;

  i64 order() const { return static_cast<i64>(elements.size()); }
  int identity() const { return 0; }
  int index_of(const Perm& p) const;
  int inverse(int e) const { return inverse_of_[static_cast<std::size_t>(e)]; }
  // Index of elements[a]*elements[b]; hash lookup, fine for occasional use.
  int multiply(int a, int b) const;
  i64 element_order(int e) const { return perm_order(elements[static_cast<std::size_t>(e)]); }

  // Fills row[y] = index of elements[x]*elements[y] for every y, in O(|G|)
  // using the BFS spanning tree; the workhorse for class-constant counting.
  void product_row(int x, std::vector<int>& row) const;

  // Index of elements[e]*generators[s].
  int act_right(int e, int s) const {
    return right_action_[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
  }

  // BFS spanning tree: elements[e] = elements[bfs_parent(e)] * generators[bfs_via(e)].
  int bfs_parent(int e) const { return bfs_parent_[static_cast<std::size_t>(e)]; }
  int bfs_via(int e) const { return bfs_via_[static_cast<std::size_t>(e)]; }

 private:
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inverse_of_;
  std::vector<int> bfs_parent_;
  std::vector<int> bfs_via_;
  std::vector<std::vector<int>> right_action_;  // [generator][element]
};

struct ConjugacyClassPartition {
  std::vector<std::vector<int>> classes;  // element indices, ascending
  std::vector<int> representatives;       // class -> smallest element index
  std::vector<int> class_of;              // element -> class
  std::vector<int> inverse_class;         // class -> class of inverses
  int count() const { return static_cast<int>(classes.size()); }
};

ConjugacyClassPartition conjugacy_classes(const FiniteGroup& G);

// Elements commuting with every generator, ascending element indices.
std::vector<int> center_elements(const FiniteGroup& G);

i64 group_exponent(const FiniteGroup& G);

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                           i64 order_bound = kDefaultOrderBound);

// Catalog families: cyclic m, dihedral m (order 2m), dicyclic m (order 4m),
// symmetric n, alternating n, klein4, sl23. Products are built with
// direct_product or through the "product" JSON spec.
FiniteGroup make_named_group(const std::string& name, const std::vector<i64>& params,
                             i64 order_bound = kDefaultOrderBound);

// Group spec JSON:
//   {"type":"permutation","degree":n,"generators":[[...],[...]]}
//   {"type":"named","name":"dicyclic","params":[6]}
//   {"type":"product","factors":[<spec>,...]}
FiniteGroup group_from_json(const nlohmann::json& spec, i64 order_bound = kDefaultOrderBound);

// Shorthand "dicyclic:6" / "symmetric:4" / "klein4"; falls back to JSON when
// the string starts with '{'.
FiniteGroup group_from_spec_string(const std::string& text, i64 order_bound = kDefaultOrderBound);

}  // namespace cgt
