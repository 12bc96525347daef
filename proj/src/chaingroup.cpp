#include "cgt/chaingroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace cgt {

using nlohmann::json;

bool ChainGroupPresentation::projection_is_zero(int label) const {
  for (i64 c : projection[static_cast<std::size_t>(label)])
    if (c != 0) return false;
  return true;
}

namespace {

// Relation vector for x_i + x_j - x_k, collapsed (i = j doubles, k = i or j
// cancels), in canonical sparse form. May be empty (e.g. unit*unit = unit).
SparseRow relation_row(int i, int j, int k) {
  std::map<int, i64> coeff;
  coeff[i] += 1;
  coeff[j] += 1;
  coeff[k] -= 1;
  SparseRow row;
  for (const auto& [c, v] : coeff)
    if (v != 0) row.push_back({c, v});
  return row;
}

std::vector<SparseRow> relation_rows(const FusionRing& F) {
  std::vector<SparseRow> rows;
  const int r = F.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& [k, m] : F.products(i, j)) {
        (void)m;
        SparseRow row = relation_row(i, j, k);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

ChainGroupPresentation presentation_from_rows(std::vector<std::string> labels,
                                              std::vector<SparseRow> rows) {
  ChainGroupPresentation P;
  P.generator_labels = std::move(labels);
  P.relations = std::move(rows);
  CokernelPresentation C =
      cokernel_of_relations(static_cast<int>(P.generator_labels.size()), P.relations);
  P.invariant_factors = std::move(C.invariant_factors);
  P.free_rank = C.free_rank;
  P.projection = std::move(C.projection);
  return P;
}

}  // namespace

ChainGroupPresentation chain_group_snf(const FusionRing& F) {
  ChainGroupPresentation P = presentation_from_rows(F.labels, relation_rows(F));
  // p_G is a t-map: every relation projects to zero (checked inside the
  // cokernel routine); unit and duals behave per the t-map identities.
  if (!P.projection_is_zero(F.unit))
    fail(ErrorKind::Internal, "chain group: unit does not project to zero");
  const std::size_t ncomp = P.invariant_factors.size() + static_cast<std::size_t>(P.free_rank);
  for (int i = 0; i < F.rank(); ++i) {
    const auto& a = P.projection[static_cast<std::size_t>(i)];
    const auto& b = P.projection[static_cast<std::size_t>(F.dual[static_cast<std::size_t>(i)])];
    for (std::size_t t = 0; t < ncomp; ++t) {
      const i64 m = t < P.invariant_factors.size() ? P.invariant_factors[t] : 0;
      const i64 sum = a[t] + b[t];
      if (m == 0 ? sum != 0 : sum % m != 0)
        fail(ErrorKind::Internal, "chain group: dual does not project to the inverse");
    }
  }
  return P;
}

ChainClassPartition chain_equivalence_classes(const FusionRing& F) {
  const int r = F.rank();
  // The class group law needs commutativity; check it directly.
  if (!F.commutative)
    fail(ErrorKind::Input, "chain classes: fusion ring must be commutative");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      if (F.products(i, j) != F.products(j, i))
        fail(ErrorKind::Input, "chain classes: ring flagged commutative but tensor is asymmetric");

  // Union-find with path compression and union by size.
  std::vector<int> parent(static_cast<std::size_t>(r)), size(static_cast<std::size_t>(r), 1);
  for (int i = 0; i < r; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    return true;
  };

  // Seed: all constituents of one product are equivalent. Closure: products
  // of equivalent inputs have equivalent constituents; rescan to a fixed
  // point so the congruence is fully generated.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> product_class;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const auto& out = F.products(i, j);
        if (out.empty()) continue;
        int c = find(out[0].first);
        for (std::size_t t = 1; t < out.size(); ++t)
          if (unite(c, out[t].first)) changed = true;
        c = find(out[0].first);
        const auto key = std::make_pair(find(i), find(j));
        auto [it, inserted] = product_class.emplace(key, c);
        if (!inserted && find(it->second) != c) {
          if (unite(it->second, c)) changed = true;
        }
      }
  }

  ChainClassPartition P;
  P.class_of.assign(static_cast<std::size_t>(r), -1);
  std::vector<int> root_to_class;
  for (int i = 0; i < r; ++i) {
    const int root = find(i);
    int cls = -1;
    for (std::size_t c = 0; c < root_to_class.size(); ++c)
      if (root_to_class[c] == root) cls = static_cast<int>(c);
    if (cls == -1) {
      cls = static_cast<int>(root_to_class.size());
      root_to_class.push_back(root);
    }
    P.class_of[static_cast<std::size_t>(i)] = cls;
  }
  P.class_count = static_cast<int>(root_to_class.size());
  P.unit_class = P.class_of[static_cast<std::size_t>(F.unit)];

  // Product table from representatives, then verified over all pairs.
  P.product_table.assign(static_cast<std::size_t>(P.class_count),
                         std::vector<int>(static_cast<std::size_t>(P.class_count), -1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const auto& out = F.products(i, j);
      if (out.empty()) continue;
      const int ci = P.class_of[static_cast<std::size_t>(i)];
      const int cj = P.class_of[static_cast<std::size_t>(j)];
      for (const auto& [k, m] : out) {
        (void)m;
        int& slot = P.product_table[static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)];
        const int ck = P.class_of[static_cast<std::size_t>(k)];
        if (slot == -1) {
          slot = ck;
        } else if (slot != ck) {
          fail(ErrorKind::Statement,
               "chain classes: product of classes depends on representatives "
               "(labels " + F.labels[static_cast<std::size_t>(i)] + "," +
                   F.labels[static_cast<std::size_t>(j)] + ")");
        }
      }
    }
  for (const auto& row : P.product_table)
    for (int v : row)
      if (v == -1) fail(ErrorKind::Internal, "chain classes: product table incomplete");

  // Inverses through duals; verified consistent and matching the table.
  P.inverse_of.assign(static_cast<std::size_t>(P.class_count), -1);
  for (int i = 0; i < r; ++i) {
    const int c = P.class_of[static_cast<std::size_t>(i)];
    const int cd = P.class_of[static_cast<std::size_t>(F.dual[static_cast<std::size_t>(i)])];
    if (P.inverse_of[static_cast<std::size_t>(c)] == -1)
      P.inverse_of[static_cast<std::size_t>(c)] = cd;
    else if (P.inverse_of[static_cast<std::size_t>(c)] != cd)
      fail(ErrorKind::Statement, "chain classes: dual-induced inverse is not well-defined");
  }
  for (int c = 0; c < P.class_count; ++c)
    if (P.product_table[static_cast<std::size_t>(c)]
                       [static_cast<std::size_t>(P.inverse_of[static_cast<std::size_t>(c)])] !=
        P.unit_class)
      fail(ErrorKind::Statement, "chain classes: inverse does not multiply to the unit class");
  return P;
}

std::vector<i64> class_group_structure(const ChainClassPartition& P) {
  std::vector<SparseRow> rows;
  for (int a = 0; a < P.class_count; ++a)
    for (int b = 0; b < P.class_count; ++b) {
      SparseRow row = relation_row(a, b, P.product_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  CokernelPresentation C = cokernel_of_relations(P.class_count, rows);
  if (C.free_rank != 0)
    fail(ErrorKind::Internal, "class group: finite group presented with free rank");
  return C.invariant_factors;
}

bool compare_chain_groups(const ChainGroupPresentation& A, const ChainClassPartition& B) {
  if (A.free_rank != 0) return false;
  if (class_group_structure(B) != A.invariant_factors) return false;
  // Fibers of the projection must equal the equivalence classes: the fiber -> class
  // map has to be well-defined and injective, covering every class.
  const int r = static_cast<int>(A.generator_labels.size());
  std::map<std::vector<i64>, int> fiber_class;
  std::set<int> used_classes;
  for (int i = 0; i < r; ++i) {
    const auto& key = A.projection[static_cast<std::size_t>(i)];
    const int cls = B.class_of[static_cast<std::size_t>(i)];
    auto [it, inserted] = fiber_class.emplace(key, cls);
    if (!inserted && it->second != cls) return false;
    used_classes.insert(cls);
  }
  return static_cast<int>(fiber_class.size()) == B.class_count &&
         used_classes.size() == fiber_class.size();
}

TruncationReport truncated_chain_group(const FusionOracle& oracle, i64 max_level) {
  if (max_level < 1) fail(ErrorKind::Input, "truncation level must be >= 1");
  TruncationReport R;
  R.levels.resize(static_cast<std::size_t>(max_level));
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic)
  for (i64 level = 1; level <= max_level; ++level) {
    try {
      std::vector<i64> window = oracle.labels_up_to_level(level);
      std::sort(window.begin(), window.end());
      std::unordered_map<i64, int> index;
      for (std::size_t t = 0; t < window.size(); ++t) index[window[t]] = static_cast<int>(t);

      std::vector<SparseRow> rows;
      for (i64 a : window)
        for (i64 b : window)
          for (i64 c : oracle.product(a, b)) {
            auto it = index.find(c);
            if (it == index.end()) continue;  // participant outside the window
            SparseRow row = relation_row(index.at(a), index.at(b), it->second);
            if (!row.empty()) rows.push_back(std::move(row));
          }

      std::vector<std::string> labels;
      labels.reserve(window.size());
      for (i64 a : window) labels.push_back(oracle.label_name(a));

      TruncationLevel L;
      L.level = level;
      L.window = std::move(window);
      L.presentation = presentation_from_rows(std::move(labels), std::move(rows));
      R.levels[static_cast<std::size_t>(level - 1)] = std::move(L);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  if (max_level >= 2) {
    const auto& prev = R.levels[static_cast<std::size_t>(max_level - 2)];
    const auto& last = R.levels[static_cast<std::size_t>(max_level - 1)];
    bool stable = prev.presentation.invariant_factors == last.presentation.invariant_factors &&
                  prev.presentation.free_rank == last.presentation.free_rank;
    if (stable) {
      // Projection fibers must agree on the shared generators.
      std::map<std::vector<i64>, std::vector<i64>> prev_to_last;
      std::map<std::vector<i64>, std::vector<i64>> last_to_prev;
      for (std::size_t t = 0; t < prev.window.size(); ++t) {
        // shared labels sit at the same indices in both sorted windows only
        // if the windows are nested; look up by label value instead
        i64 label = prev.window[t];
        auto pos = std::lower_bound(last.window.begin(), last.window.end(), label);
        if (pos == last.window.end() || *pos != label) continue;
        const std::size_t u = static_cast<std::size_t>(pos - last.window.begin());
        const auto& a = prev.presentation.projection[t];
        const auto& b = last.presentation.projection[u];
        auto [it1, ins1] = prev_to_last.emplace(a, b);
        if (!ins1 && it1->second != b) stable = false;
        auto [it2, ins2] = last_to_prev.emplace(b, a);
        if (!ins2 && it2->second != a) stable = false;
      }
    }
    R.stabilized = stable;
  }
  return R;
}

json presentation_report_json(const ChainGroupPresentation& A, const ChainClassPartition* classes,
                              std::optional<bool> stabilized) {
  json j{{"invariant_factors", A.invariant_factors}, {"free_rank", A.free_rank}};
  json cls = json::object();
  if (classes != nullptr) {
    for (std::size_t i = 0; i < A.generator_labels.size(); ++i)
      cls[A.generator_labels[i]] = classes->class_of[i];
  } else {
    // Fibers of the projection when no separate class partition is given.
    std::map<std::vector<i64>, int> fiber_id;
    for (std::size_t i = 0; i < A.generator_labels.size(); ++i) {
      auto it = fiber_id.emplace(A.projection[i], static_cast<int>(fiber_id.size())).first;
      cls[A.generator_labels[i]] = it->second;
    }
  }
  j["classes"] = std::move(cls);
  j["stabilized"] = stabilized.has_value() ? json(*stabilized) : json(nullptr);
  return j;
}

}  // namespace cgt
