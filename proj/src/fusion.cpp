#include "cgt/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

namespace cgt {

using nlohmann::json;

i64 FusionRing::mult(int i, int j, int k) const {
  for (const auto& [kk, m] : products(i, j))
    if (kk == k) return m;
  return 0;
}

int FusionRing::label_index(const std::string& s) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return static_cast<int>(i);
  fail(ErrorKind::Input, "unknown fusion label: " + s);
}

namespace {

void check_unit_and_duality(const FusionRing& F, std::vector<ValidationIssue>& issues) {
  const int r = F.rank();
  for (int j = 0; j < r; ++j) {
    const auto& left = F.products(F.unit, j);
    if (left.size() != 1 || left[0].first != j || left[0].second != 1)
      issues.push_back({"unit", {F.unit, j}, "unit*x must equal x with multiplicity 1"});
    const auto& right = F.products(j, F.unit);
    if (right.size() != 1 || right[0].first != j || right[0].second != 1)
      issues.push_back({"unit", {j, F.unit}, "x*unit must equal x with multiplicity 1"});
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const i64 expected = (j == F.dual[static_cast<std::size_t>(i)]) ? 1 : 0;
      if (F.mult(i, j, F.unit) != expected)
        issues.push_back({"duality", {i, j}, "N[i][j][unit] must be 1 exactly when j = dual(i)"});
    }
}

template <bool Parallel>
std::vector<ValidationIssue> associativity_scan(const FusionRing& F) {
  const int r = F.rank();
  std::vector<std::vector<ValidationIssue>> per_i(static_cast<std::size_t>(r));

#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (int i = 0; i < r; ++i) {
    std::vector<i64> lhs(static_cast<std::size_t>(r), 0), rhs(static_cast<std::size_t>(r), 0);
    std::vector<int> touched;
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        touched.clear();
        for (const auto& [m, n1] : F.products(i, j))
          for (const auto& [l, n2] : F.products(m, k)) {
            if (lhs[static_cast<std::size_t>(l)] == 0 && rhs[static_cast<std::size_t>(l)] == 0)
              touched.push_back(l);
            lhs[static_cast<std::size_t>(l)] += n1 * n2;
          }
        for (const auto& [m, n1] : F.products(j, k))
          for (const auto& [l, n2] : F.products(i, m)) {
            if (lhs[static_cast<std::size_t>(l)] == 0 && rhs[static_cast<std::size_t>(l)] == 0)
              touched.push_back(l);
            rhs[static_cast<std::size_t>(l)] += n1 * n2;
          }
        for (int l : touched) {
          if (lhs[static_cast<std::size_t>(l)] != rhs[static_cast<std::size_t>(l)])
            per_i[static_cast<std::size_t>(i)].push_back(
                {"associativity",
                 {i, j, k, l},
                 "(x_i x_j) x_k and x_i (x_j x_k) disagree on x_l"});
          lhs[static_cast<std::size_t>(l)] = 0;
          rhs[static_cast<std::size_t>(l)] = 0;
        }
      }
  }
  std::vector<ValidationIssue> issues;
  for (auto& v : per_i)
    for (auto& issue : v) issues.push_back(std::move(issue));
  return issues;
}

// Sampled scan for rings above the quadruple-scan rank bound.
std::vector<ValidationIssue> associativity_sampled(const FusionRing& F, std::size_t samples) {
  const int r = F.rank();
  std::mt19937_64 rng(0x5eedull);
  std::vector<ValidationIssue> issues;
  std::vector<i64> lhs(static_cast<std::size_t>(r), 0), rhs(static_cast<std::size_t>(r), 0);
  for (std::size_t s = 0; s < samples; ++s) {
    const int i = static_cast<int>(rng() % static_cast<u64>(r));
    const int j = static_cast<int>(rng() % static_cast<u64>(r));
    const int k = static_cast<int>(rng() % static_cast<u64>(r));
    std::vector<int> touched;
    for (const auto& [m, n1] : F.products(i, j))
      for (const auto& [l, n2] : F.products(m, k)) {
        if (lhs[static_cast<std::size_t>(l)] == 0 && rhs[static_cast<std::size_t>(l)] == 0)
          touched.push_back(l);
        lhs[static_cast<std::size_t>(l)] += n1 * n2;
      }
    for (const auto& [m, n1] : F.products(j, k))
      for (const auto& [l, n2] : F.products(i, m)) {
        if (lhs[static_cast<std::size_t>(l)] == 0 && rhs[static_cast<std::size_t>(l)] == 0)
          touched.push_back(l);
        rhs[static_cast<std::size_t>(l)] += n1 * n2;
      }
    for (int l : touched) {
      if (lhs[static_cast<std::size_t>(l)] != rhs[static_cast<std::size_t>(l)])
        issues.push_back({"associativity", {i, j, k, l}, "sampled quadruple disagrees"});
      lhs[static_cast<std::size_t>(l)] = 0;
      rhs[static_cast<std::size_t>(l)] = 0;
    }
  }
  return issues;
}

}  // namespace

std::vector<ValidationIssue> associativity_violations(const FusionRing& F) {
  return associativity_scan<true>(F);
}
std::vector<ValidationIssue> associativity_violations_serial(const FusionRing& F) {
  return associativity_scan<false>(F);
}

std::vector<ValidationIssue> validate_fusion_ring(const FusionRing& F,
                                                  bool check_dual_compatibility,
                                                  int rank_bound) {
  std::vector<ValidationIssue> issues;
  const int r = F.rank();
  if (r == 0) {
    issues.push_back({"shape", {}, "empty label set"});
    return issues;
  }
  if (F.unit < 0 || F.unit >= r) {
    issues.push_back({"shape", {F.unit}, "unit index out of range"});
    return issues;
  }
  for (int i = 0; i < r; ++i) {
    const int d = F.dual[static_cast<std::size_t>(i)];
    if (d < 0 || d >= r || F.dual[static_cast<std::size_t>(d)] != i)
      issues.push_back({"duality", {i}, "dual is not an involution"});
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& [k, m] : F.products(i, j))
        if (m <= 0) issues.push_back({"multiplicity", {i, j, k}, "multiplicity must be positive"});
  if (!issues.empty()) return issues;

  check_unit_and_duality(F, issues);
  if (check_dual_compatibility) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (const auto& [k, m] : F.products(i, j))
          if (F.mult(F.dual[static_cast<std::size_t>(k)], i, F.dual[static_cast<std::size_t>(j)]) != m)
            issues.push_back({"dual-compatibility", {i, j, k}, "N[i][j][k] != N[dual(k)][i][dual(j)]"});
  }
  auto assoc = (r <= rank_bound) ? associativity_violations(F)
                                 : associativity_sampled(F, 1u << 20);
  for (auto& issue : assoc) issues.push_back(std::move(issue));
  return issues;
}

FusionRing fusion_from_character_table(const ModularCharacterTable& T,
                                       const ConjugacyClassPartition& P, i64 order,
                                       bool parallel) {
  const int r = T.num_irreps;
  const u64 p = static_cast<u64>(T.p);
  if (T.p <= 2 * order)
    fail(ErrorKind::Input, "fusion from table: requires p > 2|G| for exact lifts");
  if (P.count() != r)
    fail(ErrorKind::Input, "fusion from table: class partition does not match the table");

  // Precompute h_c/|G| weights and the conjugate-permuted value rows.
  std::vector<u64> weight(static_cast<std::size_t>(r));
  const u64 inv_order = invmod(static_cast<u64>(order % T.p), p);
  for (int c = 0; c < r; ++c)
    weight[static_cast<std::size_t>(c)] =
        mulmod(static_cast<u64>(T.class_sizes[static_cast<std::size_t>(c)]) % p, inv_order, p);
  std::vector<u64> vbar(static_cast<std::size_t>(r) * r);
  for (int k = 0; k < r; ++k)
    for (int c = 0; c < r; ++c)
      vbar[static_cast<std::size_t>(k) * r + c] =
          T.value(k, T.inverse_class[static_cast<std::size_t>(c)]);

  FusionRing F;
  F.labels.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) F.labels[static_cast<std::size_t>(i)] = "X" + std::to_string(i);
  F.unit = 0;
  F.degrees = T.degrees;
  F.N.assign(static_cast<std::size_t>(r) * r, {});

  std::atomic<bool> lift_error{false};

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < r; ++i) {
    std::vector<u64> u(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      for (int c = 0; c < r; ++c)
        u[static_cast<std::size_t>(c)] =
            mulmod(mulmod(weight[static_cast<std::size_t>(c)], T.value(i, c), p), T.value(j, c), p);
      auto& bucket = F.N[static_cast<std::size_t>(i) * r + j];
      for (int k = 0; k < r; ++k) {
        u64 acc = 0;
        const u64* vb = &vbar[static_cast<std::size_t>(k) * r];
        for (int c = 0; c < r; ++c) acc = (acc + u[static_cast<std::size_t>(c)] * vb[c]) % p;
        if (acc == 0) continue;
        if (static_cast<i64>(acc) > order) {
          lift_error.store(true);
          continue;
        }
        bucket.push_back({k, static_cast<i64>(acc)});
      }
    }
  }
  if (lift_error.load())
    fail(ErrorKind::Internal,
         "fusion from table: lifted multiplicity exceeds |G|; table is inconsistent");

  // dual(i) = unique k with N[i][k][unit] = 1.
  F.dual.assign(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k)
      if (F.mult(i, k, F.unit) == 1) {
        if (F.dual[static_cast<std::size_t>(i)] != -1)
          fail(ErrorKind::Internal, "fusion from table: dual is not unique");
        F.dual[static_cast<std::size_t>(i)] = k;
      }
    if (F.dual[static_cast<std::size_t>(i)] == -1)
      fail(ErrorKind::Internal, "fusion from table: dual is missing");
  }

  // Rep G is symmetric; record and require commutativity.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      if (F.products(i, j) != F.products(j, i))
        fail(ErrorKind::Internal, "fusion from table: tensor is not symmetric");
  F.commutative = true;

  auto issues = validate_fusion_ring(F, /*check_dual_compatibility=*/true);
  if (!issues.empty())
    fail(ErrorKind::Internal, "fusion from table: axiom violation (" + issues[0].axiom + ")");
  return F;
}

FusionRing fusion_from_json(const json& j) {
  FusionRing F;
  for (const auto& l : j.at("labels")) F.labels.push_back(l.get<std::string>());
  const int r = F.rank();
  if (r == 0) fail(ErrorKind::Input, "fusion json: empty label list");
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k < r; ++k)
      if (F.labels[static_cast<std::size_t>(i)] == F.labels[static_cast<std::size_t>(k)])
        fail(ErrorKind::Input, "fusion json: duplicate label " + F.labels[static_cast<std::size_t>(i)]);
  F.unit = F.label_index(j.at("unit").get<std::string>());
  F.dual.assign(static_cast<std::size_t>(r), -1);
  for (const auto& [from, to] : j.at("dual").items())
    F.dual[static_cast<std::size_t>(F.label_index(from))] = F.label_index(to.get<std::string>());
  for (int i = 0; i < r; ++i)
    if (F.dual[static_cast<std::size_t>(i)] == -1)
      fail(ErrorKind::Input, "fusion json: dual missing for " + F.labels[static_cast<std::size_t>(i)]);
  F.commutative = j.value("commutative", false);

  F.N.assign(static_cast<std::size_t>(r) * r, {});
  std::vector<char> listed(static_cast<std::size_t>(r) * r, 0);
  if (j.contains("tensor"))
    for (const auto& [key, value] : j.at("tensor").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos)
        fail(ErrorKind::Input, "fusion json: tensor key must be \"a,b\": " + key);
      const int a = F.label_index(key.substr(0, comma));
      const int b = F.label_index(key.substr(comma + 1));
      auto& bucket = F.N[static_cast<std::size_t>(a) * r + b];
      if (!bucket.empty() || listed[static_cast<std::size_t>(a) * r + b])
        fail(ErrorKind::Input, "fusion json: duplicate tensor entry " + key);
      listed[static_cast<std::size_t>(a) * r + b] = 1;
      for (const auto& [lbl, mult] : value.items()) {
        const i64 m = mult.get<i64>();
        if (m <= 0) fail(ErrorKind::Input, "fusion json: multiplicity must be positive in " + key);
        bucket.push_back({F.label_index(lbl), m});
      }
      std::sort(bucket.begin(), bucket.end());
    }

  // Symmetric closure when declared commutative.
  if (F.commutative)
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        const std::size_t ab = static_cast<std::size_t>(a) * r + b;
        const std::size_t ba = static_cast<std::size_t>(b) * r + a;
        if (listed[ab] && !listed[ba]) {
          F.N[ba] = F.N[ab];
          listed[ba] = 1;
        } else if (listed[ab] && listed[ba] && F.N[ab] != F.N[ba]) {
          fail(ErrorKind::Input, "fusion json: commutative flag set but tensor is asymmetric at " +
                                     F.labels[static_cast<std::size_t>(a)] + "," +
                                     F.labels[static_cast<std::size_t>(b)]);
        }
      }

  // Unit laws fill unlisted pairs containing the unit; everything else must
  // be listed explicitly.
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const std::size_t ab = static_cast<std::size_t>(a) * r + b;
      if (listed[ab]) continue;
      if (a == F.unit)
        F.N[ab] = {{b, 1}};
      else if (b == F.unit)
        F.N[ab] = {{a, 1}};
      else
        fail(ErrorKind::Input, "fusion json: pair not listed: " + F.labels[static_cast<std::size_t>(a)] +
                                   "," + F.labels[static_cast<std::size_t>(b)]);
    }

  if (j.contains("degrees")) {
    F.degrees = j.at("degrees").get<std::vector<i64>>();
    if (static_cast<int>(F.degrees.size()) != r)
      fail(ErrorKind::Input, "fusion json: degrees length mismatch");
  }

  auto issues = validate_fusion_ring(F);
  if (!issues.empty()) {
    std::ostringstream os;
    os << "fusion json: axiom violations:";
    for (std::size_t t = 0; t < issues.size() && t < 8; ++t) {
      os << " [" << issues[t].axiom;
      for (int idx : issues[t].indices) os << " " << F.labels[static_cast<std::size_t>(idx)];
      os << "]";
    }
    if (issues.size() > 8) os << " (+" << issues.size() - 8 << " more)";
    fail(ErrorKind::Input, os.str());
  }
  return F;
}

FusionRing fusion_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "cannot open fusion file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::Input, "fusion file is not valid JSON: " + path);
  return fusion_from_json(j);
}

json fusion_to_json(const FusionRing& F) {
  const int r = F.rank();
  json dual = json::object();
  for (int i = 0; i < r; ++i)
    dual[F.labels[static_cast<std::size_t>(i)]] = F.labels[static_cast<std::size_t>(F.dual[static_cast<std::size_t>(i)])];
  json tensor = json::object();
  for (int i = 0; i < r; ++i)
    for (int j2 = 0; j2 < r; ++j2) {
      if (i == F.unit || j2 == F.unit) continue;
      json entry = json::object();
      for (const auto& [k, m] : F.products(i, j2))
        entry[F.labels[static_cast<std::size_t>(k)]] = m;
      tensor[F.labels[static_cast<std::size_t>(i)] + "," + F.labels[static_cast<std::size_t>(j2)]] =
          std::move(entry);
    }
  json out{{"labels", F.labels},
           {"unit", F.labels[static_cast<std::size_t>(F.unit)]},
           {"dual", std::move(dual)},
           {"tensor", std::move(tensor)},
           {"commutative", F.commutative}};
  if (!F.degrees.empty()) out["degrees"] = F.degrees;
  return out;
}

FusionOracle su2_fusion_oracle() {
  FusionOracle O;
  O.name = "su2";
  O.unit = 0;
  O.product = [](i64 l1, i64 l2) {
    std::vector<i64> out;
    for (i64 l = std::abs(l1 - l2); l <= l1 + l2; l += 2) out.push_back(l);
    return out;
  };
  O.dual = [](i64 l) { return l; };
  O.level = [](i64 l) { return l; };
  O.labels_up_to_level = [](i64 L) {
    std::vector<i64> out;
    for (i64 l = 0; l <= L; ++l) out.push_back(l);
    return out;
  };
  O.label_name = [](i64 l) { return std::to_string(l); };
  return O;
}

FusionOracle oracle_from_ring(const FusionRing& F) {
  // Copy the ring so the oracle owns its data.
  auto ring = std::make_shared<FusionRing>(F);
  FusionOracle O;
  O.name = "ring";
  O.unit = ring->unit;
  O.product = [ring](i64 a, i64 b) {
    std::vector<i64> out;
    for (const auto& [k, m] : ring->products(static_cast<int>(a), static_cast<int>(b)))
      for (i64 c = 0; c < m; ++c) out.push_back(k);
    return out;
  };
  O.dual = [ring](i64 a) { return static_cast<i64>(ring->dual[static_cast<std::size_t>(a)]); };
  O.level = [ring](i64 a) { return a == ring->unit ? 0 : 1; };
  O.labels_up_to_level = [ring](i64 L) {
    std::vector<i64> out;
    if (L >= 1) {
      for (int i = 0; i < ring->rank(); ++i) out.push_back(i);
    } else {
      out.push_back(ring->unit);
    }
    return out;
  };
  O.label_name = [ring](i64 a) { return ring->labels[static_cast<std::size_t>(a)]; };
  return O;
}

}  // namespace cgt
