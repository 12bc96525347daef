#include "cgt/snf.hpp"

#include <algorithm>
#include <map>

namespace cgt {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows) fail(ErrorKind::Internal, "mat_mul: shape mismatch");
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) {
        if (B.at(k, j) == 0) continue;
        C.at(i, j) += aik * B.at(k, j);
      }
    }
  return C;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> d;
  for (int t = 0; t < std::min(S.rows, S.cols); ++t) d.push_back(S.at(t, t));
  return d;
}

namespace {

struct SnfWork {
  IntMatrix S, U, V, Uinv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
  }
  void negate_row(int i) {
    for (int c = 0; c < S.cols; ++c) S.at(i, c) = -S.at(i, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
  }
  // row_i += q * row_j
  void row_addmul(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < S.cols; ++c) S.at(i, c) += q * S.at(j, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) += q * U.at(j, c);
    for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) -= q * Uinv.at(r, i);
  }
  // col_i += q * col_j
  void col_addmul(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < S.rows; ++r) S.at(r, i) += q * S.at(r, j);
    for (int r = 0; r < V.rows; ++r) V.at(r, i) += q * V.at(r, j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  SnfWork w{A, IntMatrix::identity(A.rows), IntMatrix::identity(A.cols),
            IntMatrix::identity(A.rows)};
  const int m = A.rows, n = A.cols;
  const int steps = std::min(m, n);
  Int q;

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero absolute value in the trailing submatrix.
      int pr = -1, pc = -1;
      Int best;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          const Int& v = w.S.at(i, j);
          if (v == 0) continue;
          Int av = abs(v);
          if (pr == -1 || av < best) {
            best = std::move(av);
            pr = i;
            pc = j;
          }
        }
      if (pr == -1) {
        t = steps;  // trailing submatrix is zero
        break;
      }
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      if (w.S.at(t, t) < 0) w.negate_row(t);

      bool leftover = false;
      for (int i = t + 1; i < m; ++i) {
        if (w.S.at(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w.S.at(i, t).get_mpz_t(), w.S.at(t, t).get_mpz_t());
        w.row_addmul(i, t, -q);
        if (w.S.at(i, t) != 0) leftover = true;
      }
      for (int j = t + 1; j < n; ++j) {
        if (w.S.at(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w.S.at(t, j).get_mpz_t(), w.S.at(t, t).get_mpz_t());
        w.col_addmul(j, t, -q);
        if (w.S.at(t, j) != 0) leftover = true;
      }
      if (leftover) continue;  // remainders are smaller than the pivot

      // Pivot must divide the interior for the divisibility chain.
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; ++i)
        for (int j = t + 1; j < n; ++j)
          if (w.S.at(i, j) % w.S.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (t >= steps) break;
  }

  // Postcondition check: U*A*V = S and U*Uinv = I.
  if (mat_mul(mat_mul(w.U, A), w.V) != w.S)
    fail(ErrorKind::Internal, "smith_normal_form: U*A*V != S");
  if (mat_mul(w.U, w.Uinv) != IntMatrix::identity(m))
    fail(ErrorKind::Internal, "smith_normal_form: U*Uinv != I");
  for (int t = 0; t + 1 < steps; ++t) {
    const Int& a = w.S.at(t, t);
    const Int& b = w.S.at(t + 1, t + 1);
    if (b != 0 && (a == 0 || b % a != 0))
      fail(ErrorKind::Internal, "smith_normal_form: divisibility chain violated");
  }
  return SmithDecomposition{std::move(w.S), std::move(w.U), std::move(w.V), std::move(w.Uinv)};
}

IntMatrix reduce_row_basis(int cols, const std::vector<SparseRow>& rows) {
  // pivot column -> dense row with that pivot (leading coefficient positive)
  std::map<int, std::vector<Int>> basis;
  std::vector<Int> r(static_cast<std::size_t>(cols));
  Int g, a, b, q, hc_g, rc_g, tmp;

  for (const auto& sparse : rows) {
    for (auto& v : r) v = 0;
    for (const auto& [c, coeff] : sparse) r[static_cast<std::size_t>(c)] = coeff;
    for (int c = 0; c < cols; ++c) {
      if (r[static_cast<std::size_t>(c)] == 0) continue;
      auto it = basis.find(c);
      if (it == basis.end()) {
        if (r[static_cast<std::size_t>(c)] < 0)
          for (auto& v : r) v = -v;
        basis.emplace(c, r);
        for (auto& v : r) v = 0;
        break;
      }
      std::vector<Int>& h = it->second;
      Int& hc = h[static_cast<std::size_t>(c)];
      Int& rc = r[static_cast<std::size_t>(c)];
      if (rc % hc == 0) {
        q = rc / hc;
        for (int k = c; k < cols; ++k)
          r[static_cast<std::size_t>(k)] -= q * h[static_cast<std::size_t>(k)];
      } else {
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), hc.get_mpz_t(), rc.get_mpz_t());
        hc_g = hc / g;
        rc_g = rc / g;
        // (h, r) <- (a*h + b*r, (hc/g)*r - (rc/g)*h); the 2x2 transform has
        // determinant 1, so the row lattice is unchanged.
        for (int k = c; k < cols; ++k) {
          Int& hk = h[static_cast<std::size_t>(k)];
          Int& rk = r[static_cast<std::size_t>(k)];
          tmp = a * hk + b * rk;
          rk = hc_g * rk - rc_g * hk;
          hk = tmp;
        }
      }
    }
  }

  IntMatrix B(static_cast<int>(basis.size()), cols);
  int row = 0;
  for (auto& [c, h] : basis) {
    for (int k = 0; k < cols; ++k) B.at(row, k) = std::move(h[static_cast<std::size_t>(k)]);
    ++row;
  }
  return B;
}

CokernelPresentation cokernel_of_relations(int num_generators,
                                           const std::vector<SparseRow>& rows) {
  const int n = num_generators;
  // Deduplicate rows by canonical sparse form.
  std::vector<SparseRow> unique_rows = rows;
  for (auto& row : unique_rows) std::sort(row.begin(), row.end());
  std::sort(unique_rows.begin(), unique_rows.end());
  unique_rows.erase(std::unique(unique_rows.begin(), unique_rows.end()), unique_rows.end());

  IntMatrix B = reduce_row_basis(n, unique_rows);

  // Cokernel of Z^n by the row space of B, via the SNF of B^T.
  IntMatrix Bt(n, B.rows);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < n; ++j) Bt.at(j, i) = B.at(i, j);

  CokernelPresentation pres;
  std::vector<int> torsion_coord, free_coord;
  IntMatrix U = IntMatrix::identity(n), Uinv = IntMatrix::identity(n);
  std::vector<Int> diag;
  if (B.rows > 0) {
    SmithDecomposition snf = smith_normal_form(Bt);
    diag = snf.diagonal();
    U = std::move(snf.U);
    Uinv = std::move(snf.Uinv);
  }
  for (int t = 0; t < n; ++t) {
    Int d = t < static_cast<int>(diag.size()) ? diag[static_cast<std::size_t>(t)] : Int(0);
    if (d == 1) continue;
    if (d == 0) {
      free_coord.push_back(t);
    } else {
      if (!d.fits_slong_p()) fail(ErrorKind::Bound, "invariant factor exceeds 64 bits");
      pres.invariant_factors.push_back(d.get_si());
      torsion_coord.push_back(t);
    }
  }
  pres.free_rank = static_cast<int>(free_coord.size());

  auto reduce_coord = [](const Int& y, i64 modulus) -> i64 {
    if (modulus == 0) {
      if (!y.fits_slong_p()) fail(ErrorKind::Bound, "free coordinate exceeds 64 bits");
      return y.get_si();
    }
    Int m(static_cast<long>(modulus)), r = y % m;
    if (r < 0) r += m;
    return r.get_si();
  };

  pres.projection.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& coords = pres.projection[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < torsion_coord.size(); ++t)
      coords.push_back(reduce_coord(U.at(torsion_coord[t], i), pres.invariant_factors[t]));
    for (int tc : free_coord) coords.push_back(reduce_coord(U.at(tc, i), 0));
  }

  for (int tc : torsion_coord) {
    std::vector<Int> comb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = Uinv.at(i, tc);
    pres.component_combination.push_back(std::move(comb));
  }
  for (int fc : free_coord) {
    std::vector<Int> comb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = Uinv.at(i, fc);
    pres.component_combination.push_back(std::move(comb));
  }

  // Every input relation must project to zero.
  const std::size_t ncomp = pres.invariant_factors.size() + static_cast<std::size_t>(pres.free_rank);
  for (const auto& row : unique_rows) {
    std::vector<i64> acc(ncomp, 0);
    for (const auto& [c, coeff] : row)
      for (std::size_t t = 0; t < ncomp; ++t)
        acc[t] += coeff * pres.projection[static_cast<std::size_t>(c)][t];
    for (std::size_t t = 0; t < ncomp; ++t) {
      i64 m = t < pres.invariant_factors.size() ? pres.invariant_factors[t] : 0;
      i64 v = m == 0 ? acc[t] : acc[t] % m;
      if (v != 0) fail(ErrorKind::Internal, "cokernel projection violates a relation");
    }
  }
  return pres;
}

}  // namespace cgt
