#include "fsq/classical.hpp"

#include <stdexcept>

namespace fsq {

namespace {
// Enumeration loops form products like 3*x*x with x <= sqrt(n); capping n
// keeps all intermediates inside uint64_t.
constexpr uint64_t kMaxEnumerable = 1000000000000000000ULL;  // 10^18

void check_enumerable(uint64_t n, const char* op) {
  if (n > kMaxEnumerable)
    throw std::range_error(std::string(op) + ": n above 10^18 would overflow");
}
}  // namespace

bool is_sum_of_three_squares(uint64_t n) {
  while (n % 4 == 0 && n > 0) n /= 4;
  return n % 8 != 7;
}

bool visit_three_square_reps(
    uint64_t n, const std::function<bool(uint64_t, uint64_t, uint64_t)>& visit) {
  check_enumerable(n, "visit_three_square_reps");
  if (n == 0) return visit(0, 0, 0);
  // x descends from floor(sqrt(n)) to the smallest x with 3x^2 >= n; within
  // each x, y descends, so the visit order is descending lexicographic.
  for (uint64_t x = isqrt(n); 3 * x * x >= n; --x) {
    uint64_t r = n - x * x;
    uint64_t ymax = isqrt(r);
    if (ymax > x) ymax = x;
    for (uint64_t y = ymax; 2 * y * y >= r; --y) {
      uint64_t z;
      if (is_perfect_square(r - y * y, &z) && z <= y) {
        if (visit(x, y, z)) return true;
      }
      if (y == 0) break;
    }
    if (x == 0) break;
  }
  return false;
}

std::vector<SquareTriple> enumerate_three_square_reps(uint64_t n) {
  std::vector<SquareTriple> out;
  visit_three_square_reps(n, [&](uint64_t x, uint64_t y, uint64_t z) {
    out.push_back({x, y, z, n});
    return false;
  });
  return out;
}

bool maybe_sum_of_two_squares(uint64_t n) {
  if (n == 0) return true;
  while (n % 4 == 0) n /= 4;
  uint64_t r = n % 8;
  if (r == 3 || r == 6 || r == 7) return false;
  for (uint64_t q : {3, 7, 11, 19, 23, 31, 43, 47, 59}) {
    if (n % q != 0) continue;
    unsigned e = 0;
    uint64_t m = n;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e % 2 == 1) return false;
  }
  return true;
}

SquareQuadruple lagrange_four_squares(uint64_t n) {
  check_enumerable(n, "lagrange_four_squares");
  // Grow the smallest part first: the first quadruple found with
  // d <= c <= b <= a is the one whose ascending sequence is lexicographically
  // smallest. Lagrange's theorem makes the search total. Pairs whose
  // remainder cannot be a sum of two squares are skipped; they contain no
  // solutions, so the first find is unchanged.
  for (uint64_t d = 0; 4 * d * d <= n; ++d) {
    uint64_t r3 = n - d * d;
    for (uint64_t c = d; 3 * c * c <= r3; ++c) {
      uint64_t r2 = r3 - c * c;
      if (!maybe_sum_of_two_squares(r2)) continue;
      for (uint64_t b = c; 2 * b * b <= r2; ++b) {
        uint64_t a;
        if (is_perfect_square(r2 - b * b, &a) && a >= b) {
          return {a, b, c, d, n};
        }
      }
    }
  }
  throw InternalContradiction("four-square search failed for n=" +
                              std::to_string(n));
}

uint64_t two_square_count(uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_square_count requires n >= 1");
  if (n > 1000000000000ULL)
    throw std::range_error("two_square_count: n above 10^12 trial-division range");
  // 4 * prod (e_i + 1) over primes p_i = 1 mod 4, zero if any prime
  // q = 3 mod 4 divides n to an odd power. Factors of 2 are irrelevant.
  while (n % 2 == 0) n /= 2;
  uint64_t count = 4;
  for (uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p % 4 == 1) {
      count *= (e + 1);
    } else if (e % 2 == 1) {
      return 0;
    }
  }
  if (n > 1) {
    if (n % 4 == 1)
      count *= 2;
    else
      return 0;
  }
  return count;
}

std::vector<TwoSquareRep> enumerate_two_square_reps(uint64_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_two_square_reps requires n >= 1");
  check_enumerable(n, "enumerate_two_square_reps");
  std::vector<TwoSquareRep> out;
  for (uint64_t s = isqrt(n); 2 * s * s >= n; --s) {
    uint64_t t;
    if (is_perfect_square(n - s * s, &t) && t <= s) out.push_back({s, t, n});
    if (s == 0) break;
  }
  return out;
}

}  // namespace fsq
