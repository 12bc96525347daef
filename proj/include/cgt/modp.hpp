#pragma once
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

// Arithmetic in F_p for p < 2^31 (products fit in u64).
inline u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 negmod(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

u64 powmod(u64 base, u64 exp, u64 p);
u64 invmod(u64 a, u64 p);

bool is_prime(i64 n);
u64 smallest_primitive_root(u64 p);

// Centered lift to (-p/2, p/2]; exact for integers known to be small.
inline i64 symmetric_lift(u64 a, u64 p) {
  return a * 2 > p ? static_cast<i64>(a) - static_cast<i64>(p) : static_cast<i64>(a);
}

// Dense row-major matrix over F_p.
struct FpMatrix {
  int rows = 0, cols = 0;
  std::vector<u64> a;
  FpMatrix() = default;
  FpMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  u64& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  u64 at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

std::vector<u64> mat_vec(const FpMatrix& M, const std::vector<u64>& v, u64 p);
u64 determinant(FpMatrix M, u64 p);  // by value: destroyed during elimination

// Basis of the kernel of M (vectors of length cols).
std::vector<std::vector<u64>> kernel_basis(FpMatrix M, u64 p);

// Polynomials over F_p, little-endian coefficients, no trailing zeros.
using FpPoly = std::vector<u64>;

FpPoly poly_trim(FpPoly f);
FpPoly poly_mul(const FpPoly& f, const FpPoly& g, u64 p);
FpPoly poly_mod(FpPoly f, const FpPoly& g, u64 p);
FpPoly poly_gcd(FpPoly f, FpPoly g, u64 p);
FpPoly poly_monic(FpPoly f, u64 p);
FpPoly poly_derivative(const FpPoly& f, u64 p);
u64 poly_eval(const FpPoly& f, u64 x, u64 p);
FpPoly poly_powmod_x(u64 e, const FpPoly& f, u64 p);        // x^e mod f
FpPoly poly_powmod(FpPoly base, u64 e, const FpPoly& f, u64 p);

// char poly of M as det(xI - M), via evaluation at cols+1 points and
// Lagrange interpolation; requires p > cols.
FpPoly charpoly(const FpMatrix& M, u64 p);

// All roots in F_p, with multiplicity stripped. `exhaustive` scans all of
// F_p; otherwise extracts linear factors via x^p - x and equal-degree
// splitting with the seeded generator.
std::vector<u64> poly_roots(const FpPoly& f, u64 p, bool exhaustive, u64 seed);

}  // namespace cgt
