#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsq {

// Raised when a search that is mathematically guaranteed to succeed comes
// back empty. This always indicates an implementation bug, never bad input,
// so it is a distinct type that callers can map to a dedicated exit status.
class InternalContradiction : public std::logic_error {
 public:
  explicit InternalContradiction(const std::string& what)
      : std::logic_error(what) {}
};

// Raised when a representation is requested for (rho, n) with k_rho(n)
// infinite (only possible for rho = 1).
class InfiniteKError : public std::domain_error {
 public:
  InfiniteKError(uint64_t rho, uint64_t n)
      : std::domain_error("k_" + std::to_string(rho) + "(" +
                          std::to_string(n) + ") is infinite"),
        rho(rho),
        n(n) {}
  uint64_t rho;
  uint64_t n;
};

// The single forbidden value rho >= 1. Squares of every other nonnegative
// integer are allowed as parts.
struct ForbiddenValue {
  explicit ForbiddenValue(uint64_t v) : value(v) {
    if (v == 0) throw std::invalid_argument("forbidden value must be >= 1");
  }
  uint64_t value;
};

// Exact integer square root, floor(sqrt(n)).
inline uint64_t isqrt(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  if (r > 4294967295ULL) r = 4294967295ULL;
  while (r > 0 && r * r > n) --r;
  while (r < 4294967295ULL && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(uint64_t n, uint64_t* root = nullptr) {
  uint64_t r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

// Floor modulus, result always in [0, m).
inline int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace fsq
