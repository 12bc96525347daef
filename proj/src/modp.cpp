#include "cgt/modp.hpp"

#include <algorithm>
#include <random>

namespace cgt {

u64 powmod(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) fail(ErrorKind::Internal, "invmod of zero");
  return powmod(a % p, p - 2, p);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 smallest_primitive_root(u64 p) {
  if (p == 2) return 1;
  std::vector<u64> prime_factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorKind::Internal, "no primitive root found");
}

std::vector<u64> mat_vec(const FpMatrix& M, const std::vector<u64>& v, u64 p) {
  std::vector<u64> out(static_cast<std::size_t>(M.rows), 0);
  for (int r = 0; r < M.rows; ++r) {
    u64 acc = 0;
    const u64* row = &M.a[static_cast<std::size_t>(r) * M.cols];
    for (int c = 0; c < M.cols; ++c) acc = (acc + row[c] * v[static_cast<std::size_t>(c)]) % p;
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

u64 determinant(FpMatrix M, u64 p) {
  if (M.rows != M.cols) fail(ErrorKind::Internal, "determinant of non-square matrix");
  const int n = M.rows;
  u64 det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (M.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) return 0;
    if (pivot != c) {
      for (int k = c; k < n; ++k) std::swap(M.at(pivot, k), M.at(c, k));
      det = negmod(det, p);
    }
    const u64 pv = M.at(c, c);
    det = mulmod(det, pv, p);
    const u64 pv_inv = invmod(pv, p);
    for (int r = c + 1; r < n; ++r) {
      if (M.at(r, c) == 0) continue;
      const u64 f = mulmod(M.at(r, c), pv_inv, p);
      for (int k = c; k < n; ++k)
        M.at(r, k) = submod(M.at(r, k), mulmod(f, M.at(c, k), p), p);
    }
  }
  return det;
}

std::vector<std::vector<u64>> kernel_basis(FpMatrix M, u64 p) {
  const int rows = M.rows, cols = M.cols;
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (M.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    if (pivot != rank)
      for (int k = 0; k < cols; ++k) std::swap(M.at(pivot, k), M.at(rank, k));
    const u64 inv = invmod(M.at(rank, c), p);
    for (int k = 0; k < cols; ++k) M.at(rank, k) = mulmod(M.at(rank, k), inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || M.at(r, c) == 0) continue;
      const u64 f = M.at(r, c);
      for (int k = 0; k < cols; ++k)
        M.at(r, k) = submod(M.at(r, k), mulmod(f, M.at(rank, k), p), p);
    }
    pivot_row_of_col[static_cast<std::size_t>(c)] = rank;
    pivot_col_of_row.push_back(c);
    ++rank;
  }
  std::vector<std::vector<u64>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_row_of_col[static_cast<std::size_t>(c)] != -1) continue;
    std::vector<u64> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(c)] = 1;
    for (int r = 0; r < rank; ++r)
      v[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] =
          negmod(M.at(r, c), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

FpPoly poly_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

FpPoly poly_mul(const FpPoly& f, const FpPoly& g, u64 p) {
  if (f.empty() || g.empty()) return {};
  FpPoly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  }
  return poly_trim(std::move(h));
}

FpPoly poly_mod(FpPoly f, const FpPoly& g, u64 p) {
  if (g.empty()) fail(ErrorKind::Internal, "poly_mod by zero");
  const u64 lead_inv = invmod(g.back(), p);
  while (f.size() >= g.size()) {
    const u64 q = mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    if (q != 0)
      for (std::size_t i = 0; i < g.size(); ++i)
        f[shift + i] = submod(f[shift + i], mulmod(q, g[i], p), p);
    f.pop_back();
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

FpPoly poly_gcd(FpPoly f, FpPoly g, u64 p) {
  f = poly_trim(std::move(f));
  g = poly_trim(std::move(g));
  while (!g.empty()) {
    FpPoly r = poly_mod(std::move(f), g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return poly_monic(std::move(f), p);
}

FpPoly poly_monic(FpPoly f, u64 p) {
  f = poly_trim(std::move(f));
  if (f.empty()) return f;
  const u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

FpPoly poly_derivative(const FpPoly& f, u64 p) {
  if (f.size() <= 1) return {};
  FpPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], i % p, p);
  return poly_trim(std::move(d));
}

u64 poly_eval(const FpPoly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return acc;
}

FpPoly poly_powmod(FpPoly base, u64 e, const FpPoly& f, u64 p) {
  FpPoly result = {1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

FpPoly poly_powmod_x(u64 e, const FpPoly& f, u64 p) {
  return poly_powmod(FpPoly{0, 1}, e, f, p);
}

FpPoly charpoly(const FpMatrix& M, u64 p) {
  if (M.rows != M.cols) fail(ErrorKind::Internal, "charpoly of non-square matrix");
  const int n = M.rows;
  if (static_cast<u64>(n) + 1 > p) fail(ErrorKind::Internal, "charpoly: p too small");
  // Evaluate det(xI - M) at n+1 points, then interpolate.
  std::vector<u64> xs(static_cast<std::size_t>(n) + 1), ys(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const u64 x = static_cast<u64>(t);
    FpMatrix A = M;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A.at(i, j) = negmod(A.at(i, j), p);
      A.at(i, i) = addmod(A.at(i, i), x, p);
    }
    xs[t] = x;
    ys[t] = determinant(std::move(A), p);
  }
  // Lagrange interpolation.
  FpPoly result(xs.size(), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    FpPoly basis = {1};
    u64 denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis = poly_mul(basis, FpPoly{negmod(xs[j], p), 1}, p);
      denom = mulmod(denom, submod(xs[i], xs[j], p), p);
    }
    const u64 scale = mulmod(ys[i], invmod(denom, p), p);
    if (basis.size() > result.size()) result.resize(basis.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      result[k] = addmod(result[k], mulmod(scale, basis[k], p), p);
  }
  return poly_trim(std::move(result));
}

namespace {

FpPoly poly_divexact(const FpPoly& f, const FpPoly& g, u64 p) {
  if (g.empty()) fail(ErrorKind::Internal, "poly_divexact by zero");
  if (f.size() < g.size()) {
    if (!poly_trim(f).empty()) fail(ErrorKind::Internal, "poly_divexact: inexact");
    return {};
  }
  FpPoly q(f.size() - g.size() + 1, 0), rem = f;
  const u64 lead_inv = invmod(g.back(), p);
  while (rem.size() >= g.size()) {
    const u64 c = mulmod(rem.back(), lead_inv, p);
    const std::size_t shift = rem.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i)
      rem[shift + i] = submod(rem[shift + i], mulmod(c, g[i], p), p);
    rem = poly_trim(std::move(rem));
  }
  if (!rem.empty()) fail(ErrorKind::Internal, "poly_divexact: inexact");
  return poly_trim(std::move(q));
}

void split_linear(const FpPoly& g, u64 p, std::mt19937_64& rng, std::vector<u64>& roots) {
  // g is monic, squarefree, and a product of distinct linear factors.
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back(negmod(g[0], p));  // x + c -> root -c
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    const u64 a = rng() % p;
    // gcd((x+a)^((p-1)/2) - 1, g)
    FpPoly power = poly_powmod(FpPoly{a, 1}, (p - 1) / 2, g, p);
    if (power.empty())
      power = FpPoly{p - 1};
    else
      power[0] = submod(power[0], 1, p);
    FpPoly h = poly_gcd(poly_trim(std::move(power)), g, p);
    if (h.size() > 1 && h.size() < g.size()) {
      split_linear(h, p, rng, roots);
      split_linear(poly_divexact(g, h, p), p, rng, roots);
      return;
    }
  }
  fail(ErrorKind::Internal, "split_linear: did not split after 256 attempts");
}

}  // namespace

std::vector<u64> poly_roots(const FpPoly& f_in, u64 p, bool exhaustive, u64 seed) {
  FpPoly f = poly_monic(f_in, p);
  if (f.empty()) fail(ErrorKind::Internal, "poly_roots of zero polynomial");
  std::vector<u64> roots;
  if (exhaustive) {
    for (u64 x = 0; x < p; ++x)
      if (poly_eval(f, x, p) == 0) roots.push_back(x);
    return roots;
  }
  // Squarefree part, then the product of linear factors via gcd with x^p - x.
  FpPoly sqfree = f;
  FpPoly d = poly_derivative(f, p);
  if (!d.empty()) {
    FpPoly g = poly_gcd(f, d, p);
    if (g.size() > 1) sqfree = poly_monic(poly_divexact(f, g, p), p);
  }
  FpPoly xp = poly_powmod_x(p, sqfree, p);  // x^p mod sqfree
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = submod(xp[1], 1, p);  // x^p - x
  FpPoly linear_part = poly_gcd(poly_trim(std::move(xp)), sqfree, p);
  std::mt19937_64 rng(seed);
  split_linear(linear_part, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cgt
