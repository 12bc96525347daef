#include "cgt/centerdual.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cgt {

using nlohmann::json;

const std::vector<i64>& AbelianGroupStructure::exponents_of(int element) const {
  auto it = std::lower_bound(subgroup_elements.begin(), subgroup_elements.end(), element);
  if (it == subgroup_elements.end() || *it != element)
    fail(ErrorKind::Internal, "exponents_of: element not in subgroup");
  return element_exponents[static_cast<std::size_t>(it - subgroup_elements.begin())];
}

AbelianGroupStructure abelian_invariants(const FiniteGroup& G, const std::vector<int>& subgroup) {
  std::vector<int> S = subgroup;
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  const int s = static_cast<int>(S.size());
  if (s == 0 || S[0] != G.identity())
    fail(ErrorKind::Input, "abelian_invariants: subgroup must contain the identity");

  std::vector<int> local_of(G.elements.size(), -1);
  for (int t = 0; t < s; ++t) local_of[static_cast<std::size_t>(S[static_cast<std::size_t>(t)])] = t;

  // Local multiplication table; verifies closure and commutativity.
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(s), std::vector<int>(static_cast<std::size_t>(s)));
  std::vector<int> row;
  for (int a = 0; a < s; ++a) {
    G.product_row(S[static_cast<std::size_t>(a)], row);
    for (int b = 0; b < s; ++b) {
      const int c = row[static_cast<std::size_t>(S[static_cast<std::size_t>(b)])];
      if (local_of[static_cast<std::size_t>(c)] == -1)
        fail(ErrorKind::Input, "abelian_invariants: subgroup is not closed under products");
      mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = local_of[static_cast<std::size_t>(c)];
    }
    if (local_of[static_cast<std::size_t>(G.inverse(S[static_cast<std::size_t>(a)]))] == -1)
      fail(ErrorKind::Input, "abelian_invariants: subgroup is not closed under inverses");
  }
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < a; ++b)
      if (mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
          mult[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
        fail(ErrorKind::Input, "abelian_invariants: subgroup is not abelian");

  // Present the subgroup on all its elements.
  std::vector<SparseRow> rows;
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      std::map<int, i64> coeff;
      coeff[a] += 1;
      coeff[b] += 1;
      coeff[mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]] -= 1;
      SparseRow r2;
      for (const auto& [c, v] : coeff)
        if (v != 0) r2.push_back({c, v});
      if (!r2.empty()) rows.push_back(std::move(r2));
    }
  CokernelPresentation C = cokernel_of_relations(s, rows);
  if (C.free_rank != 0)
    fail(ErrorKind::Internal, "abelian_invariants: finite subgroup presented with free rank");

  AbelianGroupStructure Z;
  Z.invariant_factors = C.invariant_factors;
  Z.subgroup_elements = S;

  i64 dual_order = 1;
  for (i64 m : Z.invariant_factors) dual_order *= m;
  if (dual_order != s)
    fail(ErrorKind::Internal, "abelian_invariants: invariant factors do not multiply to |S|");

  // Realize each component generator as a group element (integer combination
  // of the subgroup elements read off the inverse transform).
  for (std::size_t t = 0; t < Z.invariant_factors.size(); ++t) {
    const auto& comb = C.component_combination[t];
    int z = G.identity();
    for (int a = 0; a < s; ++a) {
      Int c = comb[static_cast<std::size_t>(a)];
      if (c == 0) continue;
      const i64 ord = G.element_order(S[static_cast<std::size_t>(a)]);
      Int cm = c % ord;
      if (cm < 0) cm += ord;
      i64 k = cm.get_si();
      int x = S[static_cast<std::size_t>(a)];
      for (i64 q = 0; q < k; ++q) z = G.multiply(z, x);
    }
    const i64 m = Z.invariant_factors[t];
    if (G.element_order(z) != m)
      fail(ErrorKind::Internal, "abelian_invariants: component generator has wrong order");
    Z.generator_elements.push_back(z);
  }

  // Exponent tuples: enumerate the direct sum and check it covers S exactly.
  const std::size_t ncomp = Z.invariant_factors.size();
  std::vector<std::vector<i64>> expo(static_cast<std::size_t>(s));
  std::vector<char> hit(static_cast<std::size_t>(s), 0);
  std::vector<i64> tuple(ncomp, 0);
  for (;;) {
    int e = G.identity();
    for (std::size_t t = 0; t < ncomp; ++t)
      for (i64 q = 0; q < tuple[t]; ++q) e = G.multiply(e, Z.generator_elements[t]);
    const int loc = local_of[static_cast<std::size_t>(e)];
    if (loc == -1 || hit[static_cast<std::size_t>(loc)])
      fail(ErrorKind::Internal, "abelian_invariants: decomposition is not a bijection");
    hit[static_cast<std::size_t>(loc)] = 1;
    expo[static_cast<std::size_t>(loc)] = tuple;
    std::size_t t = 0;
    for (; t < ncomp; ++t) {
      if (++tuple[t] < Z.invariant_factors[t]) break;
      tuple[t] = 0;
    }
    if (t == ncomp) break;
  }
  Z.element_exponents = std::move(expo);
  return Z;
}

bool CentralCharacter::is_trivial() const {
  for (i64 e : exponents)
    if (e != 0) return false;
  return true;
}

CentralCharacter central_character_add(const CentralCharacter& a, const CentralCharacter& b,
                                       const std::vector<i64>& moduli) {
  CentralCharacter c;
  c.exponents.resize(moduli.size());
  for (std::size_t t = 0; t < moduli.size(); ++t)
    c.exponents[t] = (a.exponents[t] + b.exponents[t]) % moduli[t];
  return c;
}

CentralCharacter central_character_neg(const CentralCharacter& a, const std::vector<i64>& moduli) {
  CentralCharacter c;
  c.exponents.resize(moduli.size());
  for (std::size_t t = 0; t < moduli.size(); ++t)
    c.exponents[t] = (moduli[t] - a.exponents[t]) % moduli[t];
  return c;
}

CentralCharacter central_character(int irrep, const ModularCharacterTable& T,
                                   const ConjugacyClassPartition& P,
                                   const AbelianGroupStructure& Z) {
  const u64 p = static_cast<u64>(T.p);
  CentralCharacter X;
  const u64 d_inv = invmod(static_cast<u64>(T.degrees[static_cast<std::size_t>(irrep)]) % p, p);
  for (std::size_t t = 0; t < Z.invariant_factors.size(); ++t) {
    const int z = Z.generator_elements[t];
    const int cls = P.class_of[static_cast<std::size_t>(z)];
    if (P.classes[static_cast<std::size_t>(cls)].size() != 1)
      fail(ErrorKind::Internal, "central_character: center element not in a singleton class");
    const u64 omega = mulmod(T.value(irrep, cls), d_inv, p);
    const i64 m = Z.invariant_factors[t];
    if (T.exponent % m != 0)
      fail(ErrorKind::Internal, "central_character: factor does not divide the exponent");
    const u64 root = powmod(T.zeta, static_cast<u64>(T.exponent / m), p);
    i64 log = -1;
    u64 acc = 1;
    for (i64 k = 0; k < m; ++k) {
      if (acc == omega) {
        log = k;
        break;
      }
      acc = mulmod(acc, root, p);
    }
    if (log == -1)
      fail(ErrorKind::Internal, "central_character: Schur scalar is not a power of the canonical root");
    X.exponents.push_back(log);
  }
  return X;
}

RestrictionTmap restriction_tmap(const ModularCharacterTable& T, const ConjugacyClassPartition& P,
                                 const AbelianGroupStructure& Z, const FusionRing& F) {
  RestrictionTmap R;
  const int r = T.num_irreps;
  R.chars.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) R.chars.push_back(central_character(i, T, P, Z));

  R.is_tmap = true;
  for (int i = 0; i < r && R.is_tmap; ++i)
    for (int j = 0; j < r && R.is_tmap; ++j) {
      const CentralCharacter sum = central_character_add(
          R.chars[static_cast<std::size_t>(i)], R.chars[static_cast<std::size_t>(j)], Z.invariant_factors);
      for (const auto& [k, m] : F.products(i, j)) {
        (void)m;
        if (!(R.chars[static_cast<std::size_t>(k)] == sum)) {
          R.is_tmap = false;
          break;
        }
      }
    }

  std::set<std::vector<i64>> image;
  for (const auto& c : R.chars) image.insert(c.exponents);
  i64 dual_order = 1;
  for (i64 m : Z.invariant_factors) dual_order *= m;
  R.is_surjective = static_cast<i64>(image.size()) == dual_order;
  return R;
}

std::vector<CentralCharacter> dual_group(const AbelianGroupStructure& Z) {
  std::vector<CentralCharacter> out;
  const std::size_t ncomp = Z.invariant_factors.size();
  std::vector<i64> tuple(ncomp, 0);
  for (;;) {
    out.push_back(CentralCharacter{tuple});
    std::size_t t = 0;
    for (; t < ncomp; ++t) {
      if (++tuple[t] < Z.invariant_factors[t]) break;
      tuple[t] = 0;
    }
    if (t == ncomp) break;
  }
  return out;
}

std::vector<i64> abelianization_dual(const FusionRing& F) {
  if (F.degrees.empty())
    fail(ErrorKind::Input, "abelianization_dual: ring carries no degree data");
  std::vector<int> ones;
  for (int i = 0; i < F.rank(); ++i)
    if (F.degrees[static_cast<std::size_t>(i)] == 1) ones.push_back(i);
  std::vector<int> local(static_cast<std::size_t>(F.rank()), -1);
  for (std::size_t t = 0; t < ones.size(); ++t) local[static_cast<std::size_t>(ones[t])] = static_cast<int>(t);

  // Degree-1 labels are closed under fusion with multiplicity 1; verify.
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < ones.size(); ++a)
    for (std::size_t b = 0; b < ones.size(); ++b) {
      const auto& out = F.products(ones[a], ones[b]);
      if (out.size() != 1 || out[0].second != 1 || local[static_cast<std::size_t>(out[0].first)] == -1)
        fail(ErrorKind::Internal, "abelianization_dual: degree-1 labels are not a group under fusion");
      std::map<int, i64> coeff;
      coeff[static_cast<int>(a)] += 1;
      coeff[static_cast<int>(b)] += 1;
      coeff[local[static_cast<std::size_t>(out[0].first)]] -= 1;
      SparseRow r2;
      for (const auto& [c, v] : coeff)
        if (v != 0) r2.push_back({c, v});
      if (!r2.empty()) rows.push_back(std::move(r2));
    }
  for (int i : ones)
    if (local[static_cast<std::size_t>(F.dual[static_cast<std::size_t>(i)])] == -1)
      fail(ErrorKind::Internal, "abelianization_dual: degree-1 labels are not closed under duals");

  CokernelPresentation C = cokernel_of_relations(static_cast<int>(ones.size()), rows);
  if (C.free_rank != 0)
    fail(ErrorKind::Internal, "abelianization_dual: unexpected free rank");
  return C.invariant_factors;
}

json center_report_json(const AbelianGroupStructure& Z, const RestrictionTmap& rG,
                        const FusionRing& F, const std::vector<i64>& ab_dual) {
  json rg = json::object();
  for (int i = 0; i < F.rank(); ++i)
    rg[F.labels[static_cast<std::size_t>(i)]] = rG.chars[static_cast<std::size_t>(i)].exponents;
  return json{{"center_invariants", Z.invariant_factors},
              {"generators", Z.generator_elements},
              {"r_G", std::move(rg)},
              {"abelianization_dual", ab_dual}};
}

}  // namespace cgt
