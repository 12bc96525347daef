#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cgt {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Error taxonomy shared by all modules. `witness` optionally carries a JSON
// payload describing the failing data (used by the verification suite).
enum class ErrorKind { Input, Bound, Internal, Statement };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string witness = {})
      : std::runtime_error(std::move(message)), kind(kind), witness(std::move(witness)) {}
  ErrorKind kind;
  std::string witness;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              std::string witness = {}) {
  throw Error(kind, message, std::move(witness));
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_i64(a, b) * b;
}

}  // namespace cgt
