#pragma once
#include <gmpxx.h>

#include <utility>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

using Int = mpz_class;

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;
  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static IntMatrix identity(int n);
  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);

// U*A*V = S with S diagonal, nonnegative, divisibility chain, U and V
// unimodular. Uinv is maintained alongside (U*Uinv = I, checked).
struct SmithDecomposition {
  IntMatrix S, U, V, Uinv;
  std::vector<Int> diagonal() const;
};

// Deterministic; pivot = smallest nonzero absolute value. The postcondition
// U*A*V = S and U*Uinv = I is re-verified by multiplication before returning.
SmithDecomposition smith_normal_form(const IntMatrix& A);

// Sparse relation row: (column, coefficient) pairs, columns strictly
// ascending, coefficients nonzero.
using SparseRow = std::vector<std::pair<int, i64>>;

// Lattice-preserving row reduction (integer echelon form). Returns a basis
// of the row space with at most `cols` rows; used to shrink tall relation
// matrices before running the full SNF.
IntMatrix reduce_row_basis(int cols, const std::vector<SparseRow>& rows);

// Presentation of Z^n / <rows>: invariant factors (each > 1), free rank,
// the coordinates of each standard generator in the quotient, and for each
// torsion/free component the expression of its generator as an integer
// combination of the original generators.
struct CokernelPresentation {
  std::vector<i64> invariant_factors;          // f_1 | f_2 | ..., each > 1
  int free_rank = 0;
  // per generator: torsion coordinates (mod f_t) followed by free coordinates
  std::vector<std::vector<i64>> projection;
  // per component: integer combination of original generators realizing it
  std::vector<std::vector<Int>> component_combination;
};

CokernelPresentation cokernel_of_relations(int num_generators,
                                           const std::vector<SparseRow>& rows);

}  // namespace cgt
