#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fsq/common.hpp"

// Unrestricted square-representation primitives: two-, three- and four-square
// tests, enumerations and counts. Everything else in the library builds on
// these.

namespace fsq {

// x >= y >= z >= 0 with x^2 + y^2 + z^2 = n.
struct SquareTriple {
  uint64_t x, y, z;
  uint64_t n;
};

// a >= b >= c >= d >= 0 with a^2 + b^2 + c^2 + d^2 = n.
struct SquareQuadruple {
  uint64_t a, b, c, d;
  uint64_t n;
};

// s >= t >= 0 with s^2 + t^2 = n.
struct TwoSquareRep {
  uint64_t s, t;
  uint64_t n;
};

// Legendre's criterion: n is a sum of three squares iff n != 4^a (8b + 7).
// Decided by stripping factors of 4 and testing the residue mod 8.
bool is_sum_of_three_squares(uint64_t n);

// Visits canonical triples (x >= y >= z >= 0) in descending lexicographic
// order. Stops early when the visitor returns true; returns whether a
// visitor accepted.
bool visit_three_square_reps(uint64_t n,
                             const std::function<bool(uint64_t, uint64_t, uint64_t)>& visit);

// All canonical triples for n, descending lexicographic order. Empty iff
// is_sum_of_three_squares(n) is false.
std::vector<SquareTriple> enumerate_three_square_reps(uint64_t n);

// The canonical quadruple whose ascending part sequence is lexicographically
// smallest (equivalently: found by growing the smallest parts first). Total
// for every n >= 0.
SquareQuadruple lagrange_four_squares(uint64_t n);

// r2(n): the number of ordered signed pairs (x, y) in Z^2 with x^2 + y^2 = n,
// computed from the divisor character sum 4 * sum_{d | n} (-1/d) via trial
// division. Inputs above 10^12 are rejected rather than silently degraded.
uint64_t two_square_count(uint64_t n);

// Fast negative filter: false means n is certainly not a sum of two squares
// (bad residue mod 8 after stripping fours, or a small 3-mod-4 prime to an
// odd power); true means it may be. Used to prune quadruple searches.
bool maybe_sum_of_two_squares(uint64_t n);

// All canonical pairs s >= t >= 0 with s^2 + t^2 = n, descending
// lexicographic order.
std::vector<TwoSquareRep> enumerate_two_square_reps(uint64_t n);

}  // namespace fsq
