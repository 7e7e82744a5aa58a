#include <doctest.h>

#include <algorithm>

#include "fsq/restricted.hpp"
#include "oracles.hpp"

using namespace fsq;

TEST_CASE("min_squares_avoiding known values") {
  CHECK(min_squares_avoiding(ForbiddenValue(3), 15) == KValue::finite(6));
  CHECK(min_squares_avoiding(ForbiddenValue(1), 23).is_infinite());
  CHECK(min_squares_avoiding(ForbiddenValue(2), 8) == KValue::finite(8));
  CHECK(min_squares_avoiding(ForbiddenValue(5), 79) == KValue::finite(5));
  CHECK(min_squares_avoiding(ForbiddenValue(4), 0) == KValue::finite(0));
  SweepConfig tight;
  tight.max_entries = 100;
  CHECK_THROWS_AS(min_squares_avoiding(ForbiddenValue(2), 101, tight),
                  std::range_error);
}

TEST_CASE("single-query path agrees with the sweep table") {
  for (uint64_t rho = 1; rho <= 8; ++rho) {
    SweepReport report = sweep(ForbiddenValue(rho), 5000);
    for (uint64_t n = 1; n <= 5000; ++n) {
      CHECK_MESSAGE(min_squares_avoiding(ForbiddenValue(rho), n) == report.k_of(n),
                    "rho = ", rho, " n = ", n);
    }
  }
}

TEST_CASE("sweep table matches an independent reference DP") {
  for (uint64_t rho : {1, 2, 3, 9}) {
    auto ref = testing::reference_k_table(rho, 3000);
    SweepReport report = sweep(ForbiddenValue(rho), 3000);
    for (uint64_t n = 1; n <= 3000; ++n) {
      KValue k = report.k_of(n);
      if (ref[n] == UINT32_MAX)
        CHECK(k.is_infinite());
      else
        CHECK(k == KValue::finite(ref[n]));
    }
  }
}

TEST_CASE("sweep exceptional lists for rho = 1 and 4") {
  SweepReport r1 = sweep(ForbiddenValue(1), 60);
  CHECK(r1.exceptional.at(5) == std::vector<uint64_t>{30, 35, 46, 51});
  CHECK(r1.exceptional.at(6) == std::vector<uint64_t>{39, 55});
  CHECK(r1.infinite ==
        std::vector<uint64_t>{1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23});
  CHECK(r1.max_finite_k == 6);

  SweepReport r4 = sweep(ForbiddenValue(4), 1000);
  CHECK(r4.exceptional.at(5) ==
        std::vector<uint64_t>{24, 32, 56, 88, 96, 120, 160, 224, 480, 736});
  CHECK(r4.exceptional.count(6) == 0);
  CHECK(r4.infinite.empty());

  SweepReport r7 = sweep(ForbiddenValue(7), 100);
  CHECK(r7.exceptional.empty());
}

TEST_CASE("sweep results do not depend on the worker count") {
  SweepConfig one, four;
  four.jobs = 4;
  for (uint64_t rho : {1, 2, 5}) {
    SweepReport a = sweep(ForbiddenValue(rho), 5000, one);
    SweepReport b = sweep(ForbiddenValue(rho), 5000, four);
    CHECK(a.kvals == b.kvals);
    CHECK(a.exceptional == b.exceptional);
    CHECK(a.infinite == b.infinite);
    CHECK(a.max_finite_k == b.max_finite_k);
    CHECK(a.infinite_list_complete == b.infinite_list_complete);
  }
}

TEST_CASE("sweep memory guard") {
  SweepConfig tight;
  tight.max_entries = 1000;
  CHECK_THROWS_AS(sweep(ForbiddenValue(1), 1001, tight), std::range_error);
}

TEST_CASE("Bellman consistency of the sweep table") {
  for (uint64_t rho : {1, 2, 3, 5, 9}) {
    SweepReport report = sweep(ForbiddenValue(rho), 300);
    for (uint64_t n = 1; n <= 300; ++n) {
      KValue kn = report.k_of(n);
      if (kn.is_infinite()) continue;
      uint64_t k = kn.value();
      REQUIRE(k >= 1);
      bool witness = false;
      for (uint64_t s = 1; s * s <= n; ++s) {
        if (s == rho) continue;
        KValue prev = report.k_of(n - s * s);
        if (!prev.is_infinite()) {
          CHECK(k <= prev.value() + 1);
          if (prev.value() == k - 1) witness = true;
        }
      }
      CHECK_MESSAGE(witness, "no Bellman witness at n = ", n, " rho = ", rho);
    }
  }
}

TEST_CASE("k is finite and at most n for rho >= 2") {
  for (uint64_t rho : {2, 3, 10}) {
    SweepReport report = sweep(ForbiddenValue(rho), 400);
    for (uint64_t n = 1; n <= 400; ++n) {
      KValue k = report.k_of(n);
      REQUIRE_FALSE(k.is_infinite());
      CHECK(k.value() <= n);
      CHECK(k.value() >= 1);
    }
  }
}

TEST_CASE("no k above 4 at or beyond 550 rho^2") {
  SweepReport report = sweep(ForbiddenValue(1), 700);
  for (uint64_t n = 550; n <= 700; ++n) {
    KValue k = report.k_of(n);
    REQUIRE_FALSE(k.is_infinite());
    CHECK(k.value() <= 4);
  }
}

TEST_CASE("minimal_representation extracts valid minimal witnesses") {
  Representation rep = minimal_representation(ForbiddenValue(2), 24);
  CHECK(rep.parts == std::vector<uint64_t>{3, 3, 1, 1, 1, 1, 1, 1});
  rep.validate();

  Representation r79 = minimal_representation(ForbiddenValue(5), 79);
  CHECK(r79.parts == std::vector<uint64_t>{8, 3, 2, 1, 1});

  CHECK(minimal_representation(ForbiddenValue(3), 0).parts.empty());
  CHECK_THROWS_AS(minimal_representation(ForbiddenValue(1), 23), InfiniteKError);

  for (uint64_t rho : {1, 2, 6}) {
    SweepReport report = sweep(ForbiddenValue(rho), 500);
    for (uint64_t n = 1; n <= 500; ++n) {
      if (report.k_of(n).is_infinite()) continue;
      Representation w = minimal_representation(ForbiddenValue(rho), n);
      w.validate();
      CHECK(w.parts.size() == report.k_of(n).value());
    }
  }
}

TEST_CASE("i_set lists and shortcuts") {
  CHECK(i_set(ForbiddenValue(1), 30) ==
        std::vector<uint64_t>{1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23});
  CHECK(i_set(ForbiddenValue(1), 10) ==
        std::vector<uint64_t>{1, 2, 3, 5, 6, 7, 10});
  CHECK(i_set(ForbiddenValue(2), 100).empty());
  CHECK(sweep(ForbiddenValue(1), 549).infinite_list_complete == false);
  CHECK(sweep(ForbiddenValue(1), 550).infinite_list_complete == true);
  CHECK(sweep(ForbiddenValue(2), 10).infinite_list_complete == true);
}

TEST_CASE("compute_M on the small cases") {
  CHECK(compute_M(ForbiddenValue(1)) == 6);
  CHECK(compute_M(ForbiddenValue(2)) == 8);
  CHECK(compute_M(ForbiddenValue(9)) == 4);
  SweepConfig tight;
  tight.max_entries = 1000;
  CHECK_THROWS_AS(compute_M(ForbiddenValue(50), tight), std::range_error);
}

TEST_CASE("predicted_M closed form") {
  CHECK(predicted_M(ForbiddenValue(2)) == 8);
  CHECK(predicted_M(ForbiddenValue(1)) == 6);
  CHECK(predicted_M(ForbiddenValue(3)) == 6);
  CHECK(predicted_M(ForbiddenValue(5)) == 5);
  CHECK(predicted_M(ForbiddenValue(4)) == 5);
  CHECK(predicted_M(ForbiddenValue(12)) == 5);
  CHECK(predicted_M(ForbiddenValue(16)) == 5);
  CHECK(predicted_M(ForbiddenValue(48)) == 5);
  CHECK(predicted_M(ForbiddenValue(25)) == 4);
  CHECK(predicted_M(ForbiddenValue(7)) == 4);
  CHECK(predicted_M(ForbiddenValue(9)) == 4);
  CHECK(predicted_M(ForbiddenValue(36)) == 4);
}

TEST_CASE("classify_rho examples and partition property") {
  CHECK(classify_rho(ForbiddenValue(7)).kind == RhoClass::Kind::HasPrimeDivisorGt3);
  RhoClass p16 = classify_rho(ForbiddenValue(16));
  CHECK(p16.kind == RhoClass::Kind::PowerOfTwo);
  CHECK(p16.a == 3);
  CHECK(classify_rho(ForbiddenValue(36)).kind == RhoClass::Kind::NineDivides);

  for (uint64_t rho = 1; rho <= 5000; ++rho) {
    RhoClass c = classify_rho(ForbiddenValue(rho));
    switch (c.kind) {
      case RhoClass::Kind::SmallCase:
        CHECK(rho <= 5);
        break;
      case RhoClass::Kind::PowerOfTwo:
        CHECK(rho == uint64_t{1} << (c.a + 1));
        CHECK(c.a >= 2);
        break;
      case RhoClass::Kind::ThreeTimesPowerOfTwo:
        CHECK(rho == uint64_t{3} << (c.a + 1));
        break;
      case RhoClass::Kind::NineDivides: {
        CHECK(rho % 9 == 0);
        uint64_t rebuilt = 1;
        for (uint32_t i = 0; i < c.two_exp; ++i) rebuilt *= 2;
        for (uint32_t i = 0; i < c.three_exp; ++i) rebuilt *= 3;
        CHECK(rebuilt == rho);
        break;
      }
      case RhoClass::Kind::HasPrimeDivisorGt3: {
        uint64_t rest = rho;
        while (rest % 2 == 0) rest /= 2;
        while (rest % 3 == 0) rest /= 3;
        CHECK(rest > 1);
        CHECK(rho >= 6);
        break;
      }
    }
  }
}

TEST_CASE("representable_as_k_nonzero_squares examples") {
  CHECK_FALSE(representable_as_k_nonzero_squares(5, 33));
  CHECK_FALSE(representable_as_k_nonzero_squares(4, 32));
  CHECK(representable_as_k_nonzero_squares(5, 34));
  CHECK(representable_as_k_nonzero_squares(1, 49));
  CHECK_FALSE(representable_as_k_nonzero_squares(2, 3));
}

TEST_CASE("dubouis exception sets match the closed forms") {
  CHECK(dubouis_exception_set(5, 40) ==
        std::vector<uint64_t>{1, 2, 3, 4, 6, 7, 9, 10, 12, 15, 18, 33});
  CHECK(dubouis_exception_set(6, 20) ==
        std::vector<uint64_t>{1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 16, 19});
  CHECK(dubouis_exception_set(4, 50) ==
        std::vector<uint64_t>{1, 2, 3, 5, 6, 8, 9, 11, 14, 17, 24, 29, 32, 41});
  CHECK(dubouis_closed_form(4, 50) ==
        std::vector<uint64_t>{1, 2, 3, 5, 6, 8, 9, 11, 14, 17, 24, 29, 32, 41});
  for (uint64_t k = 4; k <= 8; ++k)
    CHECK(dubouis_exception_set(k, 600) == dubouis_closed_form(k, 600));
  CHECK_THROWS_AS(dubouis_exception_set(3, 100), std::invalid_argument);
}

TEST_CASE("report_from_kvals rebuilds a sweep prefix") {
  SweepReport big = sweep(ForbiddenValue(3), 800);
  SweepReport direct = sweep(ForbiddenValue(3), 300);
  SweepReport rebuilt = report_from_kvals(ForbiddenValue(3), 300, big.kvals);
  CHECK(rebuilt.kvals == direct.kvals);
  CHECK(rebuilt.exceptional == direct.exceptional);
  CHECK(rebuilt.infinite == direct.infinite);
  CHECK(rebuilt.max_finite_k == direct.max_finite_k);
  CHECK(rebuilt.infinite_list_complete == direct.infinite_list_complete);
}
