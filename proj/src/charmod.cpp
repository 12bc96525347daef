#include "cgt/charmod.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cgt {

using nlohmann::json;

i64 ClassAlgebraConstants::at(int i, int j, int k) const {
  for (const auto& [kk, cnt] : pair(i, j))
    if (kk == k) return cnt;
  return 0;
}

ClassAlgebraConstants class_algebra_constants(const FiniteGroup& G,
                                              const ConjugacyClassPartition& P) {
  const int r = P.count();
  const std::size_t n = G.elements.size();
  ClassAlgebraConstants C;
  C.num_classes = r;
  C.entries.assign(static_cast<std::size_t>(r) * r, {});

  // For fixed z_k, the pairs (x,y) with x*y = z_k are exactly
  // (z_k * y^-1, y) for y in G; one product row per class enumerates them.
  std::vector<i64> counts(static_cast<std::size_t>(r) * r);
  std::vector<int> row;
  for (int k = 0; k < r; ++k) {
    std::fill(counts.begin(), counts.end(), 0);
    G.product_row(P.representatives[static_cast<std::size_t>(k)], row);
    for (std::size_t yinv = 0; yinv < n; ++yinv) {
      const int x = row[yinv];
      const int y = G.inverse(static_cast<int>(yinv));
      ++counts[static_cast<std::size_t>(P.class_of[static_cast<std::size_t>(x)]) * r +
               P.class_of[static_cast<std::size_t>(y)]];
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const i64 c = counts[static_cast<std::size_t>(i) * r + j];
        if (c != 0) C.entries[static_cast<std::size_t>(i) * r + j].push_back({k, c});
      }
  }
  // Unit law: a[0][j][k] = delta_jk.
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      if (C.at(0, j, k) != (j == k ? 1 : 0))
        fail(ErrorKind::Internal, "class constants: identity class is not a unit");
  return C;
}

ClassAlgebraConstants class_algebra_constants_bruteforce(const FiniteGroup& G,
                                                         const ConjugacyClassPartition& P) {
  const int r = P.count();
  const std::size_t n = G.elements.size();
  std::vector<i64> totals(static_cast<std::size_t>(r) * r * r, 0);
  std::vector<int> row;
  for (std::size_t x = 0; x < n; ++x) {
    G.product_row(static_cast<int>(x), row);
    const int ci = P.class_of[x];
    for (std::size_t y = 0; y < n; ++y) {
      const int cj = P.class_of[y];
      const int ck = P.class_of[static_cast<std::size_t>(row[y])];
      ++totals[(static_cast<std::size_t>(ci) * r + cj) * r + ck];
    }
  }
  ClassAlgebraConstants C;
  C.num_classes = r;
  C.entries.assign(static_cast<std::size_t>(r) * r, {});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const i64 total = totals[(static_cast<std::size_t>(i) * r + j) * r + k];
        if (total == 0) continue;
        const i64 hk = static_cast<i64>(P.classes[static_cast<std::size_t>(k)].size());
        if (total % hk != 0)
          fail(ErrorKind::Internal, "class constants: total not divisible by class size");
        C.entries[static_cast<std::size_t>(i) * r + j].push_back({k, total / hk});
      }
  return C;
}

i64 choose_prime(i64 order, i64 exponent) {
  if (order < 1 || exponent < 1) fail(ErrorKind::Input, "choose_prime: bad arguments");
  i64 p = exponent + 1;
  while (p <= 2 * order || !is_prime(p)) p += exponent;
  if (p >= (1ll << 31)) fail(ErrorKind::Bound, "choose_prime: prime too large");
  return p;
}

i64 next_qualifying_prime(i64 order, i64 exponent, i64 after) {
  i64 p = choose_prime(order, exponent);
  while (p <= after) {
    p += exponent;
    while (!is_prime(p)) p += exponent;
  }
  if (p >= (1ll << 31)) fail(ErrorKind::Bound, "next_qualifying_prime: prime too large");
  return p;
}

namespace {

// Reduced row echelon basis of a subspace of F_p^dim.
struct Subspace {
  std::vector<std::vector<u64>> basis;  // RREF rows
  std::vector<int> pivots;
};

Subspace rref(std::vector<std::vector<u64>> vectors, u64 p) {
  Subspace S;
  const std::size_t dim = vectors.empty() ? 0 : vectors[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < vectors.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && vectors[pivot][c] == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[rank], vectors[pivot]);
    const u64 inv = invmod(vectors[rank][c], p);
    for (auto& v : vectors[rank]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (i == rank || vectors[i][c] == 0) continue;
      const u64 f = vectors[i][c];
      for (std::size_t k = c; k < dim; ++k)
        vectors[i][k] = submod(vectors[i][k], mulmod(f, vectors[rank][k], p), p);
    }
    S.pivots.push_back(static_cast<int>(c));
    ++rank;
  }
  vectors.resize(rank);
  S.basis = std::move(vectors);
  return S;
}

// w = M_j v using the sparse class constants: column l of M_j has entry
// a[j][l][k] at row k.
void apply_class_matrix(const ClassAlgebraConstants& C, int j, const std::vector<u64>& v,
                        std::vector<u64>& w, u64 p) {
  const int r = C.num_classes;
  w.assign(static_cast<std::size_t>(r), 0);
  for (int l = 0; l < r; ++l) {
    const u64 vl = v[static_cast<std::size_t>(l)];
    if (vl == 0) continue;
    for (const auto& [k, cnt] : C.pair(j, l)) {
      auto& slot = w[static_cast<std::size_t>(k)];
      slot = (slot + static_cast<u64>(cnt) % p * vl) % p;
    }
  }
}

void apply_dense_matrix(const FpMatrix& M, const std::vector<u64>& v, std::vector<u64>& w,
                        u64 p) {
  w = mat_vec(M, v, p);
}

// Splits `space` into eigenspaces of the operator `op` restricted to it.
template <typename Apply>
std::vector<Subspace> split_by_operator(const Subspace& space, Apply&& op, u64 p,
                                        bool exhaustive_roots, u64 seed) {
  const std::size_t d = space.basis.size();
  const std::size_t dim = space.basis[0].size();
  // Restriction matrix X: column idx = coordinates of op(basis[idx]).
  FpMatrix X(static_cast<int>(d), static_cast<int>(d));
  std::vector<u64> w;
  for (std::size_t idx = 0; idx < d; ++idx) {
    op(space.basis[idx], w);
    for (std::size_t t = 0; t < d; ++t) {
      const u64 coeff = w[static_cast<std::size_t>(space.pivots[t])];
      X.at(static_cast<int>(t), static_cast<int>(idx)) = coeff;
      if (coeff != 0)
        for (std::size_t k = 0; k < dim; ++k)
          w[k] = submod(w[k], mulmod(coeff, space.basis[t][k], p), p);
    }
    for (u64 rest : w)
      if (rest != 0) fail(ErrorKind::Internal, "class matrix does not preserve subspace");
  }
  FpPoly cp = charpoly(X, p);
  std::vector<u64> eigenvalues = poly_roots(cp, p, exhaustive_roots, seed);
  std::vector<Subspace> children;
  for (u64 lambda : eigenvalues) {
    FpMatrix A = X;
    for (std::size_t t = 0; t < d; ++t)
      A.at(static_cast<int>(t), static_cast<int>(t)) =
          submod(A.at(static_cast<int>(t), static_cast<int>(t)), lambda, p);
    auto null_coords = kernel_basis(std::move(A), p);
    if (null_coords.empty()) continue;
    std::vector<std::vector<u64>> vecs;
    for (const auto& coords : null_coords) {
      std::vector<u64> v(dim, 0);
      for (std::size_t t = 0; t < d; ++t) {
        if (coords[t] == 0) continue;
        for (std::size_t k = 0; k < dim; ++k)
          v[k] = (v[k] + coords[t] * space.basis[t][k]) % p;
      }
      vecs.push_back(std::move(v));
    }
    children.push_back(rref(std::move(vecs), p));
  }
  std::size_t total = 0;
  for (const auto& c : children) total += c.basis.size();
  if (total != d) fail(ErrorKind::Internal, "eigenspace split lost dimension");
  return children;
}

i64 isqrt_exact(i64 n) {
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

}  // namespace

ModularCharacterTable character_table_mod_p(const FiniteGroup& G,
                                            const ConjugacyClassPartition& P,
                                            const ClassAlgebraConstants& C, i64 prime) {
  const int r = P.count();
  const i64 order = G.order();
  const i64 e = group_exponent(G);
  const i64 p = prime == 0 ? choose_prime(order, e) : prime;
  if (!is_prime(p) || (p - 1) % e != 0 || p <= 2 * order)
    fail(ErrorKind::Input, "character table: prime does not qualify (needs p = 1 mod exponent, p > 2|G|)");
  const u64 up = static_cast<u64>(p);
  const bool exhaustive = r <= 64;
  const u64 seed = 0xC0FFEEull ^ static_cast<u64>(p);

  // Simultaneous eigenspace refinement by the class matrices in class order.
  std::vector<Subspace> spaces;
  {
    std::vector<std::vector<u64>> id(static_cast<std::size_t>(r),
                                     std::vector<u64>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    spaces.push_back(rref(std::move(id), up));
  }
  auto fully_split = [&] {
    for (const auto& s : spaces)
      if (s.basis.size() > 1) return false;
    return true;
  };
  for (int j = 1; j < r && !fully_split(); ++j) {
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      auto children = split_by_operator(
          s, [&](const std::vector<u64>& v, std::vector<u64>& w) { apply_class_matrix(C, j, v, w, up); },
          up, exhaustive, seed + static_cast<u64>(j));
      for (auto& c : children) next.push_back(std::move(c));
    }
    spaces = std::move(next);
  }
  if (!fully_split()) {
    // Seeded pseudo-random combinations of the class matrices.
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64 && !fully_split(); ++attempt) {
      FpMatrix M(r, r);
      for (int j = 1; j < r; ++j) {
        const u64 c = rng() % up;
        if (c == 0) continue;
        for (int l = 0; l < r; ++l)
          for (const auto& [k, cnt] : C.pair(j, l))
            M.at(k, l) = (M.at(k, l) + c * (static_cast<u64>(cnt) % up)) % up;
      }
      std::vector<Subspace> next;
      for (auto& s : spaces) {
        if (s.basis.size() == 1) {
          next.push_back(std::move(s));
          continue;
        }
        auto children = split_by_operator(
            s, [&](const std::vector<u64>& v, std::vector<u64>& w) { apply_dense_matrix(M, v, w, up); },
            up, exhaustive, seed + 7919u * static_cast<u64>(attempt + 1));
        for (auto& c : children) next.push_back(std::move(c));
      }
      spaces = std::move(next);
    }
  }
  if (!fully_split())
    fail(ErrorKind::Internal,
         "character table: eigenspace refinement did not reach one-dimensional spaces");

  // Eigenvalues omega[i][j] = h_j chi_i(g_j) / d_i from the common eigenvectors.
  std::vector<u64> omega(static_cast<std::size_t>(r) * r);
  std::vector<u64> w;
  for (int i = 0; i < r; ++i) {
    const auto& v = spaces[static_cast<std::size_t>(i)].basis[0];
    const int t = spaces[static_cast<std::size_t>(i)].pivots[0];  // v[t] = 1
    omega[static_cast<std::size_t>(i) * r + 0] = 1;               // identity class sum
    for (int j = 1; j < r; ++j) {
      apply_class_matrix(C, j, v, w, up);
      omega[static_cast<std::size_t>(i) * r + j] = w[static_cast<std::size_t>(t)];
    }
  }

  ModularCharacterTable T;
  T.p = p;
  T.exponent = e;
  T.group_order = order;
  T.num_irreps = r;
  T.zeta = powmod(smallest_primitive_root(up), static_cast<u64>((p - 1) / e), up);
  T.class_sizes.resize(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j)
    T.class_sizes[static_cast<std::size_t>(j)] =
        static_cast<i64>(P.classes[static_cast<std::size_t>(j)].size());
  T.inverse_class = P.inverse_class;
  T.degrees.resize(static_cast<std::size_t>(r));
  T.values.assign(static_cast<std::size_t>(r) * r, 0);

  const u64 order_mod = static_cast<u64>(order) % up;
  for (int i = 0; i < r; ++i) {
    u64 s = 0;
    for (int j = 0; j < r; ++j) {
      const int jb = P.inverse_class[static_cast<std::size_t>(j)];
      const u64 hj_inv = invmod(static_cast<u64>(T.class_sizes[static_cast<std::size_t>(j)]) % up, up);
      s = (s + mulmod(mulmod(omega[static_cast<std::size_t>(i) * r + j],
                             omega[static_cast<std::size_t>(i) * r + jb], up),
                      hj_inv, up)) %
          up;
    }
    if (s == 0) fail(ErrorKind::Internal, "character table: degenerate degree sum");
    const u64 d_sq = mulmod(order_mod, invmod(s, up), up);
    const i64 d = isqrt_exact(static_cast<i64>(d_sq));
    if (d <= 0) fail(ErrorKind::Internal, "character table: degree^2 lift is not a square");
    T.degrees[static_cast<std::size_t>(i)] = d;
    const u64 dm = static_cast<u64>(d) % up;
    for (int j = 0; j < r; ++j) {
      const u64 hj_inv = invmod(static_cast<u64>(T.class_sizes[static_cast<std::size_t>(j)]) % up, up);
      T.values[static_cast<std::size_t>(i) * r + j] =
          mulmod(mulmod(dm, omega[static_cast<std::size_t>(i) * r + j], up), hj_inv, up);
    }
  }

  // Put the trivial character (all values 1) in row 0.
  int trivial = -1;
  for (int i = 0; i < r && trivial == -1; ++i) {
    bool all_one = true;
    for (int j = 0; j < r; ++j)
      if (T.value(i, j) != 1) {
        all_one = false;
        break;
      }
    if (all_one) trivial = i;
  }
  if (trivial == -1) fail(ErrorKind::Internal, "character table: trivial character missing");
  if (trivial != 0) {
    for (int j = 0; j < r; ++j)
      std::swap(T.values[static_cast<std::size_t>(trivial) * r + j],
                T.values[static_cast<std::size_t>(j)]);
    std::swap(T.degrees[static_cast<std::size_t>(trivial)], T.degrees[0]);
  }

  i64 degree_sq_sum = 0;
  for (i64 d : T.degrees) degree_sq_sum += d * d;
  if (degree_sq_sum != order)
    fail(ErrorKind::Internal, "character table: sum of squared degrees differs from |G|");
  if (!verify_orthogonality(T))
    fail(ErrorKind::Internal, "character table: orthogonality check failed");
  return T;
}

ModularCharacterTable character_table_mod_p(const FiniteGroup& G, i64 prime) {
  auto P = conjugacy_classes(G);
  auto C = class_algebra_constants(G, P);
  return character_table_mod_p(G, P, C, prime);
}

bool verify_orthogonality(const ModularCharacterTable& T) {
  const int r = T.num_irreps;
  const u64 p = static_cast<u64>(T.p);
  const u64 order_mod = static_cast<u64>(T.group_order % T.p);
  for (int i = 0; i < r; ++i)
    for (int i2 = 0; i2 < r; ++i2) {
      u64 s = 0;
      for (int j = 0; j < r; ++j) {
        const int jb = T.inverse_class[static_cast<std::size_t>(j)];
        const u64 hj = static_cast<u64>(T.class_sizes[static_cast<std::size_t>(j)]) % p;
        s = (s + mulmod(hj, mulmod(T.value(i, j), T.value(i2, jb), p), p)) % p;
      }
      if (s != (i == i2 ? order_mod : 0)) return false;
    }
  return true;
}

json table_to_json(const ModularCharacterTable& T) {
  json values = json::array();
  for (int i = 0; i < T.num_irreps; ++i) {
    json row = json::array();
    for (int j = 0; j < T.num_irreps; ++j) row.push_back(T.value(i, j));
    values.push_back(std::move(row));
  }
  return json{{"p", T.p},
              {"zeta", T.zeta},
              {"class_sizes", T.class_sizes},
              {"inverse_class", T.inverse_class},
              {"degrees", T.degrees},
              {"values", values}};
}

ModularCharacterTable table_from_json(const json& j) {
  ModularCharacterTable T;
  T.p = j.at("p").get<i64>();
  if (!is_prime(T.p)) fail(ErrorKind::Input, "character table json: p is not prime");
  T.zeta = j.at("zeta").get<u64>();
  T.class_sizes = j.at("class_sizes").get<std::vector<i64>>();
  T.inverse_class = j.at("inverse_class").get<std::vector<int>>();
  T.degrees = j.at("degrees").get<std::vector<i64>>();
  T.num_irreps = static_cast<int>(T.degrees.size());
  const auto& values = j.at("values");
  if (static_cast<int>(values.size()) != T.num_irreps ||
      static_cast<int>(T.class_sizes.size()) != T.num_irreps ||
      static_cast<int>(T.inverse_class.size()) != T.num_irreps)
    fail(ErrorKind::Input, "character table json: inconsistent dimensions");
  T.values.reserve(static_cast<std::size_t>(T.num_irreps) * T.num_irreps);
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != T.num_irreps)
      fail(ErrorKind::Input, "character table json: ragged value matrix");
    for (const auto& v : row) {
      const i64 x = v.get<i64>();
      if (x < 0 || x >= T.p) fail(ErrorKind::Input, "character table json: value out of range");
      T.values.push_back(static_cast<u64>(x));
    }
  }
  i64 order = 0;
  for (i64 d : T.degrees) order += d * d;
  T.group_order = order;
  i64 size_sum = 0;
  for (i64 h : T.class_sizes) size_sum += h;
  if (size_sum != order)
    fail(ErrorKind::Input, "character table json: class sizes do not sum to sum of degree squares");
  if (T.p <= 2 * order) fail(ErrorKind::Input, "character table json: p too small");
  // zeta's multiplicative order is the recorded exponent.
  i64 ord = 1;
  u64 z = T.zeta % static_cast<u64>(T.p);
  if (z == 0) fail(ErrorKind::Input, "character table json: zeta is zero");
  u64 acc = z;
  while (acc != 1) {
    acc = mulmod(acc, z, static_cast<u64>(T.p));
    if (++ord > T.p) fail(ErrorKind::Input, "character table json: zeta order overflow");
  }
  T.exponent = ord;
  if (T.class_sizes.empty() || T.class_sizes[0] != 1)
    fail(ErrorKind::Input, "character table json: class 0 must be the identity class");
  for (int i = 0; i < T.num_irreps; ++i) {
    if (T.value(0, i) != 1)
      fail(ErrorKind::Input, "character table json: row 0 is not the trivial character");
    if (static_cast<i64>(T.value(i, 0)) != T.degrees[static_cast<std::size_t>(i)] % T.p)
      fail(ErrorKind::Input, "character table json: identity column does not match degrees");
  }
  if (!verify_orthogonality(T))
    fail(ErrorKind::Input, "character table json: orthogonality fails");
  return T;
}

std::vector<i64> permutation_character(const FiniteGroup& G, const ConjugacyClassPartition& P) {
  std::vector<i64> theta;
  theta.reserve(P.classes.size());
  for (int rep : P.representatives) {
    const Perm& g = G.elements[static_cast<std::size_t>(rep)];
    i64 fixed = 0;
    for (std::size_t x = 0; x < g.size(); ++x)
      if (g[x] == static_cast<int>(x)) ++fixed;
    theta.push_back(fixed);
  }
  return theta;
}

std::vector<int> squared_class_map(const FiniteGroup& G, const ConjugacyClassPartition& P) {
  std::vector<int> sq;
  sq.reserve(P.classes.size());
  for (int rep : P.representatives) {
    const Perm& g = G.elements[static_cast<std::size_t>(rep)];
    sq.push_back(P.class_of[static_cast<std::size_t>(G.index_of(perm_mul(g, g)))]);
  }
  return sq;
}

std::vector<i64> irrep_multiplicities(const ModularCharacterTable& T,
                                      const std::vector<i64>& theta) {
  const u64 p = static_cast<u64>(T.p);
  const u64 inv_order = invmod(static_cast<u64>(T.group_order % T.p), p);
  std::vector<i64> mult;
  for (int i = 0; i < T.num_irreps; ++i) {
    u64 s = 0;
    for (int j = 0; j < T.num_irreps; ++j) {
      const int jb = T.inverse_class[static_cast<std::size_t>(j)];
      const u64 hj = static_cast<u64>(T.class_sizes[static_cast<std::size_t>(j)]) % p;
      const u64 th = static_cast<u64>(((theta[static_cast<std::size_t>(j)] % T.p) + T.p) % T.p);
      s = (s + mulmod(hj, mulmod(th, T.value(i, jb), p), p)) % p;
    }
    s = mulmod(s, inv_order, p);
    mult.push_back(symmetric_lift(s, p));
  }
  return mult;
}

std::vector<i64> frobenius_schur_indicators(const ModularCharacterTable& T,
                                            const std::vector<int>& squared_class) {
  const u64 p = static_cast<u64>(T.p);
  const u64 inv_order = invmod(static_cast<u64>(T.group_order % T.p), p);
  std::vector<i64> fs;
  for (int i = 0; i < T.num_irreps; ++i) {
    u64 s = 0;
    for (int j = 0; j < T.num_irreps; ++j) {
      const u64 hj = static_cast<u64>(T.class_sizes[static_cast<std::size_t>(j)]) % p;
      s = (s + mulmod(hj, T.value(i, squared_class[static_cast<std::size_t>(j)]), p)) % p;
    }
    const i64 v = symmetric_lift(mulmod(s, inv_order, p), p);
    if (v < -1 || v > 1)
      fail(ErrorKind::Internal, "frobenius-schur indicator outside {-1,0,1}");
    fs.push_back(v);
  }
  return fs;
}

}  // namespace cgt
