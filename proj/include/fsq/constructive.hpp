#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fsq/classical.hpp"
#include "fsq/common.hpp"
#include "fsq/restricted.hpp"

// Certificate-producing constructions: the three residue cases of the
// large-n four-square theorem, Cauchy's lemma with prescribed sum, the
// mod-3 avoidance transform, and the per-class builders for rho >= 6.

namespace fsq {

// Integer solution of p + q + r + s = b, p^2 + q^2 + r^2 + s^2 = a.
struct CauchyWitness {
  int64_t a = 0;
  int64_t b = 0;
  int64_t p = 0, q = 0, r = 0, s = 0;
};

// x + y + z + w = 0 with x^2 + y^2 + z^2 + w^2 = target (target = 2 mod 4).
struct ZeroSumQuadruple {
  int64_t x = 0, y = 0, z = 0, w = 0;
  uint64_t target = 0;
};

// n = 4^e * l with l != 0 mod 4.
struct ScalingForm {
  uint64_t n = 0;
  unsigned e = 0;
  uint64_t l = 0;
};

// n = 2^(2s) * t with t = 2 mod 4 or t = 4 mod 8 (requires 8 | n).
struct EvenScalingForm {
  uint64_t n = 0;
  unsigned s = 0;
  uint64_t t = 0;
};

enum class Method {
  Large2Mod4,   // zero-sum ternary construction around 4m^2
  LargeOdd,     // Cauchy's lemma around 4m^2 + 2m
  LargeScale,   // 4-adic scaling recursion
  PrimeGt3,     // filtered four-square enumeration
  PowTwo,       // rho = 2^(a+1) residue construction
  ThreePowTwo,  // rho = 3 * 2^(a+1) residue construction
  DivNine,      // mod-3 repair via the avoidance transform
  SmallCaseDp,  // minimal witness from the oracle
};

std::string_view method_tag(Method m);

// A verified representation: parts >= 1, != rho, descending, squares sum to
// n; `minimal` records whether the length is certified equal to k_rho(n).
struct Certificate {
  uint64_t n = 0;
  uint64_t rho = 0;
  std::vector<uint64_t> parts;
  Method method = Method::SmallCaseDp;
  bool minimal = false;
};

// Throws InternalContradiction unless the certificate invariants hold.
void validate_certificate(const Certificate& cert);

ScalingForm split_pow4(uint64_t n);
EvenScalingForm split_even_scaling(uint64_t n);

// Cauchy's lemma, integer-solution variant: requires a odd positive, b odd,
// b^2 < 4a. Writes 4a - b^2 (= 3 mod 8) as a sum of three odd squares,
// flips the sign of the smallest one if needed so b + x + y + z = 0 mod 4,
// and recombines.
CauchyWitness cauchy_solve(int64_t a, int64_t b);

// First solution of x^2 + y^2 + z^2 + (x+y+z)^2 = target under the scan
// x = 0.., y = 0..x, z = larger root of the resulting quadratic; requires
// target > 0, target = 2 mod 4.
ZeroSumQuadruple zero_sum_quadruple(uint64_t target);

// A four-square representation avoiding rho for any n >= 550 rho^2.
Certificate represent_large(ForbiddenValue rho, uint64_t n,
                            const SweepConfig& config = {});

// A triple with gcd(x, y, z, 3) = 1; when 3 | n, all of x, y, z are coprime
// to 3. Requires is_sum_of_three_squares(n).
SquareTriple primitive_three_squares_mod3(uint64_t n);

// Rewrites a three-square representation to eliminate +-a0 while preserving
// the sum of squares. Requires a0 = 0 mod 9, a0 != 0, a1 = 1 mod 3,
// a2 = 2 mod 3, all nonzero, |ai| <= 10^8.
std::array<int64_t, 3> avoidance_transform(int64_t a0, int64_t a1, int64_t a2);

// rho divisible by 9: at most 4 parts for every n >= 1.
Certificate rep_div9(ForbiddenValue rho, uint64_t n,
                     const SweepConfig& config = {});

// rho = 2^(a+1), a >= 2: at most 4 parts unless n is one of the ten
// exceptional multiples of rho^2 and (rho/2)^2, which need exactly 5.
Certificate rep_pow2(ForbiddenValue rho, uint64_t n,
                     const SweepConfig& config = {});

// rho = 3 * 2^(a+1), a >= 0: at most 4 parts unless n = 14 * 2^(2a+2).
Certificate rep_3pow2(ForbiddenValue rho, uint64_t n,
                      const SweepConfig& config = {});

// rho >= 6 with a prime divisor >= 5: at most 4 parts by filtered
// enumeration of four-square representations.
Certificate rep_prime_gt3(ForbiddenValue rho, uint64_t n,
                          const SweepConfig& config = {});

// Top-level entry point: a minimal certificate from the oracle when
// n < 550 rho^2 fits the sweep budget, otherwise the class-specific
// construction. Throws InfiniteKError for rho = 1, n in I(1).
Certificate represent_avoiding(ForbiddenValue rho, uint64_t n,
                               const SweepConfig& config = {});

}  // namespace fsq
