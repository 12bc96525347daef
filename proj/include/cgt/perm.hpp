#pragma once
#include <cstddef>
#include <numeric>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

// A permutation of {0,...,degree-1}, stored as its image array.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool perm_is_valid(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  for (int v : a) {
    if (v < 0 || static_cast<std::size_t>(v) >= a.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// (a*b)(x) = a(b(x)); matches left-to-right application of b then a.
inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

inline void perm_mul_into(const Perm& a, const Perm& b, Perm& out) {
  out.resize(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
}

inline Perm perm_inv(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<int>(x);
  return c;
}

inline bool perm_is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != static_cast<int>(x)) return false;
  return true;
}

// Order of the permutation = lcm of its cycle lengths.
inline i64 perm_order(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  i64 ord = 1;
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (seen[start]) continue;
    i64 len = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = 1;
      x = static_cast<std::size_t>(a[x]);
      ++len;
    }
    ord = lcm_i64(ord, len);
  }
  return ord;
}

inline Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      int from = cyc[t];
      int to = cyc[(t + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        fail(ErrorKind::Input, "cycle point out of range");
      p[from] = to;
    }
  }
  if (!perm_is_valid(p)) fail(ErrorKind::Input, "cycles overlap");
  return p;
}

struct PermHash {
  std::size_t operator()(const Perm& a) const {
    // FNV-1a over the image array
    u64 h = 1469598103934665603ull;
    for (int v : a) {
      h ^= static_cast<u64>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace cgt
