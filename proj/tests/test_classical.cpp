#include <doctest.h>

#include "fsq/classical.hpp"
#include "oracles.hpp"

using namespace fsq;

TEST_CASE("three-square test matches Legendre residues") {
  CHECK_FALSE(is_sum_of_three_squares(7));
  CHECK(is_sum_of_three_squares(14));
  CHECK_FALSE(is_sum_of_three_squares(60));  // 4 * 15, 15 = 7 mod 8
  CHECK(is_sum_of_three_squares(0));
}

TEST_CASE("three-square test agrees with a sieve oracle up to 1e5") {
  const uint64_t bound = 100000;
  auto two_sq = testing::two_square_sieve(bound);
  for (uint64_t n = 0; n <= bound; ++n) {
    bool any = false;
    for (uint64_t z = 0; z * z <= n && !any; ++z) any = two_sq[n - z * z];
    CHECK_MESSAGE(is_sum_of_three_squares(n) == any, "n = ", n);
  }
}

TEST_CASE("three-square enumeration order and contents") {
  auto zero = enumerate_three_square_reps(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].x == 0);

  auto r14 = enumerate_three_square_reps(14);
  REQUIRE(r14.size() == 1);
  CHECK(r14[0].x == 3);
  CHECK(r14[0].y == 2);
  CHECK(r14[0].z == 1);

  // 86 = 81+4+1 = 49+36+1 = 36+25+25, descending lexicographic.
  auto r86 = enumerate_three_square_reps(86);
  REQUIRE(r86.size() == 3);
  CHECK(r86[0].x == 9);
  CHECK(r86[1].x == 7);
  CHECK(r86[1].y == 6);
  CHECK(r86[2].x == 6);
  CHECK(r86[2].y == 5);
  CHECK(r86[2].z == 5);
}

TEST_CASE("three-square enumeration is canonical, complete and sorted") {
  for (uint64_t n : {1, 2, 25, 81, 86, 325, 1000, 5000, 5985}) {
    auto reps = enumerate_three_square_reps(n);
    uint64_t prev_x = UINT64_MAX, prev_y = UINT64_MAX;
    for (const auto& t : reps) {
      CHECK(t.x * t.x + t.y * t.y + t.z * t.z == n);
      CHECK(t.x >= t.y);
      CHECK(t.y >= t.z);
      bool lex_desc = t.x < prev_x || (t.x == prev_x && t.y < prev_y);
      CHECK(lex_desc);
      prev_x = t.x;
      prev_y = t.y;
    }
    CHECK(reps.size() == testing::count_three_square_reps(n));
  }
}

TEST_CASE("four-scaling property: reps of 4n are doubled reps of n") {
  for (uint64_t n = 0; n <= 2500; ++n) {
    auto base = enumerate_three_square_reps(n);
    auto scaled = enumerate_three_square_reps(4 * n);
    REQUIRE(base.size() == scaled.size());
    for (size_t i = 0; i < base.size(); ++i) {
      CHECK(scaled[i].x == 2 * base[i].x);
      CHECK(scaled[i].y == 2 * base[i].y);
      CHECK(scaled[i].z == 2 * base[i].z);
    }
  }
}

TEST_CASE("lagrange_four_squares picks the smallest-parts-first witness") {
  auto zero = lagrange_four_squares(0);
  CHECK(zero.a == 0);
  CHECK(zero.d == 0);

  auto r79 = lagrange_four_squares(79);
  CHECK(r79.a == 7);
  CHECK(r79.b == 5);
  CHECK(r79.c == 2);
  CHECK(r79.d == 1);

  auto r7 = lagrange_four_squares(7);
  CHECK(r7.a == 2);
  CHECK(r7.b == 1);
  CHECK(r7.c == 1);
  CHECK(r7.d == 1);
}

TEST_CASE("lagrange_four_squares is valid and ascending-lex minimal") {
  for (uint64_t n = 0; n <= 300; ++n) {
    auto q = lagrange_four_squares(n);
    CHECK(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d == n);
    CHECK(q.a >= q.b);
    CHECK(q.b >= q.c);
    CHECK(q.c >= q.d);
    auto all = testing::all_four_square_reps(n);
    REQUIRE(!all.empty());
    auto key = [](const std::array<uint64_t, 4>& v) {
      return std::array<uint64_t, 4>{v[3], v[2], v[1], v[0]};
    };
    std::array<uint64_t, 4> mine{q.a, q.b, q.c, q.d};
    for (const auto& cand : all) CHECK(key(mine) <= key(cand));
  }
}

TEST_CASE("two_square_count examples and errors") {
  CHECK(two_square_count(25) == 12);
  CHECK(two_square_count(65) == 16);
  CHECK(two_square_count(3) == 0);
  CHECK(two_square_count(1) == 4);
  CHECK(two_square_count(2) == 4);
  CHECK_THROWS_AS(two_square_count(0), std::invalid_argument);
  CHECK_THROWS_AS(two_square_count(2000000000000ULL), std::range_error);
}

TEST_CASE("two_square_count equals the lattice count up to 2000") {
  for (uint64_t n = 1; n <= 2000; ++n)
    CHECK_MESSAGE(two_square_count(n) == testing::lattice_r2(n), "n = ", n);
}

TEST_CASE("two_square_count decomposes into canonical pair classes") {
  // Ordered signed pairs: 8 per canonical s > t > 0, 4 per s > t = 0,
  // 4 per s = t > 0.
  for (uint64_t n = 1; n <= 10000; ++n) {
    uint64_t strict = 0, axis = 0, diag = 0;
    for (const auto& rep : enumerate_two_square_reps(n)) {
      if (rep.t == 0)
        ++axis;
      else if (rep.s == rep.t)
        ++diag;
      else
        ++strict;
    }
    CHECK(two_square_count(n) == 8 * strict + 4 * axis + 4 * diag);
  }
}

TEST_CASE("maybe_sum_of_two_squares never rejects a representable value") {
  auto sieve = testing::two_square_sieve(20000);
  for (uint64_t n = 1; n <= 20000; ++n) {
    if (!maybe_sum_of_two_squares(n)) CHECK_FALSE(sieve[n]);
    if (sieve[n]) CHECK(maybe_sum_of_two_squares(n));
  }
}

TEST_CASE("two-square enumeration examples") {
  auto r2v = enumerate_two_square_reps(2);
  REQUIRE(r2v.size() == 1);
  CHECK(r2v[0].s == 1);
  CHECK(r2v[0].t == 1);

  auto r65 = enumerate_two_square_reps(65);
  REQUIRE(r65.size() == 2);
  CHECK(r65[0].s == 8);
  CHECK(r65[0].t == 1);
  CHECK(r65[1].s == 7);
  CHECK(r65[1].t == 4);

  auto r25 = enumerate_two_square_reps(25);
  REQUIRE(r25.size() == 2);
  CHECK(r25[0].s == 5);
  CHECK(r25[0].t == 0);
  CHECK(r25[1].s == 4);
  CHECK(r25[1].t == 3);
}
