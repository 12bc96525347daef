// Test-only fusion oracle, independent of the Dixon-Schneider path: builds
// the irreducible characters of a small group by enumerating its
// one-dimensional characters outright and sifting tensor powers of the
// natural permutation character, over a second prime. Fusion coefficients
// come from exhaustive inner products. Comparison against the pipeline goes
// through the canonical label order on both sides.
#pragma once
#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "cgt/pipeline.hpp"

namespace cgt::testoracle {

using Row = std::vector<u64>;

struct Sifter {
  const FiniteGroup& G;
  const ConjugacyClassPartition& P;
  u64 q = 0;
  i64 exponent = 0;
  u64 zeta = 0;
  std::vector<i64> class_sizes;
  std::vector<Row> irreducibles;

  u64 inner(const Row& f, const Row& g) const {
    u64 s = 0;
    for (int j = 0; j < P.count(); ++j) {
      const int jb = P.inverse_class[static_cast<std::size_t>(j)];
      s = (s + static_cast<u64>(class_sizes[static_cast<std::size_t>(j)]) % q *
                   mulmod(f[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(jb)], q)) %
          q;
    }
    return mulmod(s, invmod(static_cast<u64>(G.order() % static_cast<i64>(q)), q), q);
  }

  Row product(const Row& f, const Row& g) const {
    Row h(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) h[j] = mulmod(f[j], g[j], q);
    return h;
  }
};

inline std::vector<Row> one_dimensional_characters(const FiniteGroup& G,
                                                   const ConjugacyClassPartition& P, u64 q,
                                                   u64 primitive_root) {
  std::vector<std::vector<u64>> candidates;
  for (const auto& s : G.generators) {
    const i64 o = perm_order(s);
    std::vector<u64> vals;
    const u64 root = powmod(primitive_root, (q - 1) / static_cast<u64>(o), q);
    u64 acc = 1;
    for (i64 k = 0; k < o; ++k) {
      vals.push_back(acc);
      acc = mulmod(acc, root, q);
    }
    candidates.push_back(std::move(vals));
  }
  std::vector<Row> found;
  std::vector<std::size_t> pick(candidates.size(), 0);
  for (;;) {
    std::vector<u64> phi(G.elements.size());
    phi[0] = 1;
    for (std::size_t e = 1; e < G.elements.size(); ++e) {
      const auto via = static_cast<std::size_t>(G.bfs_via(static_cast<int>(e)));
      phi[e] = mulmod(phi[static_cast<std::size_t>(G.bfs_parent(static_cast<int>(e)))],
                      candidates[via][pick[via]], q);
    }
    bool ok = true;
    for (std::size_t e = 0; e < G.elements.size() && ok; ++e)
      for (std::size_t s = 0; s < G.generators.size() && ok; ++s)
        ok = phi[static_cast<std::size_t>(G.act_right(static_cast<int>(e), static_cast<int>(s)))] ==
             mulmod(phi[e], candidates[s][pick[s]], q);
    if (ok) {
      Row row(static_cast<std::size_t>(P.count()));
      bool class_function = true;
      for (int c = 0; c < P.count(); ++c) {
        row[static_cast<std::size_t>(c)] =
            phi[static_cast<std::size_t>(P.representatives[static_cast<std::size_t>(c)])];
        for (int e : P.classes[static_cast<std::size_t>(c)])
          class_function =
              class_function && phi[static_cast<std::size_t>(e)] == row[static_cast<std::size_t>(c)];
      }
      if (!class_function) fail(ErrorKind::Internal, "sift oracle: 1-dim not a class function");
      if (std::find(found.begin(), found.end(), row) == found.end()) found.push_back(row);
    }
    std::size_t t = 0;
    for (; t < candidates.size(); ++t) {
      if (++pick[t] < candidates[t].size()) break;
      pick[t] = 0;
    }
    if (t == candidates.size()) break;
  }
  return found;
}

inline Sifter build_sifter(const FiniteGroup& G, const ConjugacyClassPartition& P,
                           i64 avoid_prime) {
  const i64 e = group_exponent(G);
  // Generous lower bound so that multiplicities and remainder norms of the
  // candidate characters (theta powers, exterior squares) lift exactly.
  const i64 n = G.degree;
  const i64 floor = 2 * (n * n * n * n + G.order() * G.order());
  i64 q = next_qualifying_prime(G.order(), e, std::max(floor, 2 * G.order()));
  if (q == avoid_prime) q = next_qualifying_prime(G.order(), e, q);
  const u64 uq = static_cast<u64>(q);
  const u64 root = smallest_primitive_root(uq);

  Sifter O{G, P, uq, e, powmod(root, static_cast<u64>((q - 1) / e), uq), {}, {}};
  for (const auto& c : P.classes) O.class_sizes.push_back(static_cast<i64>(c.size()));
  O.irreducibles = one_dimensional_characters(G, P, uq, root);

  const int r = P.count();
  Row theta(static_cast<std::size_t>(r));
  for (int c = 0; c < r; ++c) {
    const Perm& g =
        G.elements[static_cast<std::size_t>(P.representatives[static_cast<std::size_t>(c)])];
    u64 fixed = 0;
    for (std::size_t x = 0; x < g.size(); ++x)
      if (g[x] == static_cast<int>(x)) ++fixed;
    theta[static_cast<std::size_t>(c)] = fixed % uq;
  }
  const auto sq = squared_class_map(G, P);
  const u64 half = invmod(2, uq);
  auto exterior_square = [&](const Row& chi) {
    Row h(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      h[static_cast<std::size_t>(j)] =
          mulmod(submod(mulmod(chi[static_cast<std::size_t>(j)], chi[static_cast<std::size_t>(j)], uq),
                        chi[static_cast<std::size_t>(sq[static_cast<std::size_t>(j)])], uq),
                 half, uq);
    return h;
  };
  auto symmetric_square = [&](const Row& chi) {
    Row h(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      h[static_cast<std::size_t>(j)] =
          mulmod(addmod(mulmod(chi[static_cast<std::size_t>(j)], chi[static_cast<std::size_t>(j)], uq),
                        chi[static_cast<std::size_t>(sq[static_cast<std::size_t>(j)])], uq),
                 half, uq);
    return h;
  };

  auto is_zero = [](const Row& f) {
    for (u64 v : f)
      if (v != 0) return false;
    return true;
  };
  // Subtract every known irreducible constituent.
  auto sift = [&](Row f) {
    for (const auto& chi : O.irreducibles) {
      const i64 mult = symmetric_lift(O.inner(f, chi), uq);
      if (mult < 0 || mult > G.order() * G.order())
        fail(ErrorKind::Internal, "sift oracle: implausible multiplicity");
      if (mult == 0) continue;
      for (std::size_t j = 0; j < f.size(); ++j)
        f[j] = submod(f[j], mulmod(static_cast<u64>(mult) % uq, chi[j], uq), uq);
    }
    return f;
  };

  std::deque<Row> work{theta, exterior_square(theta), symmetric_square(theta)};
  std::vector<Row> remainders;

  auto add_irreducible = [&](const Row& chi) {
    O.irreducibles.push_back(chi);
    for (const auto& other : O.irreducibles) work.push_back(O.product(chi, other));
    work.push_back(O.product(chi, theta));
  };

  // Norm-1 positive-dimension rows are irreducible characters; rows whose
  // norm is s^2 with row/s of norm 1 are s copies of one.
  auto try_extract = [&](const Row& f) -> bool {
    const i64 norm = symmetric_lift(O.inner(f, f), uq);
    if (norm <= 0) return false;
    if (norm == 1) {
      if (symmetric_lift(f[0], uq) <= 0) return false;
      add_irreducible(f);
      return true;
    }
    const i64 s = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(norm))));
    if (s * s != norm) return false;
    Row scaled = f;
    const u64 s_inv = invmod(static_cast<u64>(s) % uq, uq);
    for (auto& v : scaled) v = mulmod(v, s_inv, uq);
    if (symmetric_lift(O.inner(scaled, scaled), uq) != 1 || symmetric_lift(scaled[0], uq) <= 0)
      return false;
    add_irreducible(scaled);
    return true;
  };

  // Small integer combinations of two remainders can isolate an irreducible
  // (e.g. two inequivalent 2-dimensionals entangled in different counts).
  auto try_combinations = [&]() -> bool {
    for (std::size_t a = 0; a < remainders.size(); ++a)
      for (std::size_t b = 0; b < remainders.size(); ++b) {
        if (a == b) continue;
        for (i64 c1 = 1; c1 <= 3; ++c1)
          for (i64 c2 = -3; c2 <= 3; ++c2) {
            Row h(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j) {
              u64 v = mulmod(static_cast<u64>(c1), remainders[a][static_cast<std::size_t>(j)], uq);
              const u64 w =
                  mulmod(static_cast<u64>(std::abs(c2)) % uq, remainders[b][static_cast<std::size_t>(j)], uq);
              h[static_cast<std::size_t>(j)] = c2 >= 0 ? addmod(v, w, uq) : submod(v, w, uq);
            }
            if (is_zero(h)) continue;
            if (symmetric_lift(O.inner(h, h), uq) == 1 && symmetric_lift(h[0], uq) > 0) {
              add_irreducible(h);
              return true;
            }
          }
      }
    return false;
  };

  int guard = 0;
  while (static_cast<int>(O.irreducibles.size()) < r) {
    if (++guard > 2000) fail(ErrorKind::Internal, "sift oracle: did not find all irreducibles");

    if (!work.empty()) {
      Row f = sift(work.front());
      work.pop_front();
      if (is_zero(f)) continue;
      if (try_extract(f)) continue;
      remainders.push_back(std::move(f));
    }

    // re-sift remainders against the current list and mine pair combinations
    bool progress = true;
    while (progress && static_cast<int>(O.irreducibles.size()) < r) {
      progress = false;
      std::vector<Row> keep;
      for (auto& rem : remainders) {
        Row f = sift(rem);
        if (is_zero(f)) {
          progress = true;
          continue;
        }
        if (try_extract(f)) {
          progress = true;
          continue;
        }
        if (f != rem) progress = true;
        keep.push_back(std::move(f));
      }
      remainders = std::move(keep);
      if (static_cast<int>(O.irreducibles.size()) < r && try_combinations()) progress = true;
    }

    if (work.empty() && static_cast<int>(O.irreducibles.size()) < r) {
      // last resort: tensor the smallest remainder up by theta
      if (remainders.empty())
        work.push_back(O.product(theta, theta));
      else
        work.push_back(O.product(remainders.front(), theta));
    }
  }
  return O;
}

struct CrossCheckResult {
  bool ok = false;
  std::string detail;
};

// Full cross-check of the pipeline's canonical fusion data for one group.
inline CrossCheckResult cross_check_fusion(const std::string& spec) {
  std::ostringstream why;
  FiniteGroup G = group_from_spec_string(spec);
  GroupAnalysis A = analyze_group(G);
  const int r = A.classes.count();

  Sifter O = build_sifter(A.group, A.classes, A.table.p);
  if (static_cast<i64>(O.q) == A.table.p) return {false, "oracle prime not independent"};

  std::vector<i64> degrees;
  for (const auto& chi : O.irreducibles) {
    const i64 d = symmetric_lift(chi[0], O.q);
    if (d < 1) return {false, "oracle degree not positive"};
    degrees.push_back(d);
  }

  std::vector<std::vector<i64>> tensor(static_cast<std::size_t>(r) * r,
                                       std::vector<i64>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Row prod = O.product(O.irreducibles[static_cast<std::size_t>(i)],
                                 O.irreducibles[static_cast<std::size_t>(j)]);
      for (int k = 0; k < r; ++k) {
        const i64 mult = symmetric_lift(O.inner(prod, O.irreducibles[static_cast<std::size_t>(k)]), O.q);
        if (mult < 0 || mult > G.order()) return {false, "oracle multiplicity out of range"};
        tensor[static_cast<std::size_t>(i) * r + j][static_cast<std::size_t>(k)] = mult;
      }
    }

  FusionRing ring;
  ring.labels.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) ring.labels[static_cast<std::size_t>(i)] = "o" + std::to_string(i);
  ring.degrees = degrees;
  int unit = -1;
  for (int i = 0; i < r; ++i) {
    bool all_one = true;
    for (int c = 0; c < r; ++c)
      all_one = all_one && O.irreducibles[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == 1;
    if (all_one) unit = i;
  }
  if (unit == -1) return {false, "oracle lost the trivial character"};
  ring.unit = unit;
  ring.N.assign(static_cast<std::size_t>(r) * r, {});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const i64 m = tensor[static_cast<std::size_t>(i) * r + j][static_cast<std::size_t>(k)];
        if (m > 0) ring.N[static_cast<std::size_t>(i) * r + j].push_back({k, m});
      }
  ring.dual.assign(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      if (ring.mult(i, k, unit) == 1) {
        if (ring.dual[static_cast<std::size_t>(i)] != -1) return {false, "oracle dual not unique"};
        ring.dual[static_cast<std::size_t>(i)] = k;
      }
  for (int i = 0; i < r; ++i)
    if (ring.dual[static_cast<std::size_t>(i)] == -1) return {false, "oracle dual missing"};
  ring.commutative = true;
  if (!validate_fusion_ring(ring).empty()) return {false, "oracle ring fails validation"};

  auto Z = abelian_invariants(A.group, center_elements(A.group));
  const auto sq = squared_class_map(A.group, A.classes);
  const auto theta_int = permutation_character(A.group, A.classes);
  const u64 inv_order = invmod(static_cast<u64>(G.order() % static_cast<i64>(O.q)), O.q);
  std::vector<std::vector<i64>> keys(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const Row& chi = O.irreducibles[static_cast<std::size_t>(i)];
    auto& key = keys[static_cast<std::size_t>(i)];
    key.push_back(i == unit ? 0 : 1);
    key.push_back(degrees[static_cast<std::size_t>(i)]);
    u64 fs = 0;
    for (int j = 0; j < r; ++j)
      fs = (fs + static_cast<u64>(O.class_sizes[static_cast<std::size_t>(j)]) % O.q *
                     chi[static_cast<std::size_t>(sq[static_cast<std::size_t>(j)])]) %
           O.q;
    key.push_back(symmetric_lift(mulmod(fs, inv_order, O.q), O.q));
    u64 pm = 0;
    for (int j = 0; j < r; ++j) {
      const int jb = A.classes.inverse_class[static_cast<std::size_t>(j)];
      pm = (pm + static_cast<u64>(O.class_sizes[static_cast<std::size_t>(j)]) % O.q *
                     mulmod(static_cast<u64>(theta_int[static_cast<std::size_t>(j)]) % O.q,
                            chi[static_cast<std::size_t>(jb)], O.q)) %
           O.q;
    }
    key.push_back(symmetric_lift(mulmod(pm, inv_order, O.q), O.q));
    const u64 d_inv = invmod(static_cast<u64>(degrees[static_cast<std::size_t>(i)]) % O.q, O.q);
    for (std::size_t t = 0; t < Z.invariant_factors.size(); ++t) {
      const int cls = A.classes.class_of[static_cast<std::size_t>(Z.generator_elements[t])];
      const u64 omega = mulmod(chi[static_cast<std::size_t>(cls)], d_inv, O.q);
      const i64 m = Z.invariant_factors[t];
      const u64 root = powmod(O.zeta, static_cast<u64>(O.exponent / m), O.q);
      i64 log = -1;
      u64 acc = 1;
      for (i64 kk = 0; kk < m; ++kk) {
        if (acc == omega) {
          log = kk;
          break;
        }
        acc = mulmod(acc, root, O.q);
      }
      if (log < 0) return {false, "oracle central character not a canonical-root power"};
      key.push_back(log);
    }
  }
  const auto order = canonical_label_order(ring, keys);

  for (int i = 0; i < r; ++i) {
    if (A.ring.degrees[static_cast<std::size_t>(i)] !=
        degrees[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) {
      why << "degree mismatch at canonical position " << i;
      return {false, why.str()};
    }
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const i64 pipeline_mult = A.ring.mult(i, j, k);
        const i64 oracle_mult =
            tensor[static_cast<std::size_t>(order[static_cast<std::size_t>(i)]) * r +
                   order[static_cast<std::size_t>(j)]]
                  [static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        if (pipeline_mult != oracle_mult) {
          why << "fusion mismatch at (" << i << "," << j << "," << k << "): pipeline "
              << pipeline_mult << " vs oracle " << oracle_mult << " (p=" << A.table.p
              << ", q=" << O.q << ")";
          return {false, why.str()};
        }
      }
  }
  return {true, ""};
}

}  // namespace cgt::testoracle
