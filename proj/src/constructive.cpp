#include "fsq/constructive.hpp"

#include <algorithm>
#include <bit>

#include "fsq/classical.hpp"

namespace fsq {

std::string_view method_tag(Method m) {
  switch (m) {
    case Method::Large2Mod4: return "thm550-2mod4";
    case Method::LargeOdd: return "thm550-odd";
    case Method::LargeScale: return "thm550-scale";
    case Method::PrimeGt3: return "thm3.1";
    case Method::PowTwo: return "thm3.2";
    case Method::ThreePowTwo: return "thm3.3";
    case Method::DivNine: return "thm3.6";
    case Method::SmallCaseDp: return "small-case-dp";
  }
  return "unknown";
}

void validate_certificate(const Certificate& cert) {
  unsigned __int128 sum = 0;
  uint64_t prev = UINT64_MAX;
  for (uint64_t p : cert.parts) {
    if (p == 0 || p == cert.rho || p > prev)
      throw InternalContradiction("certificate part violation for n=" +
                                  std::to_string(cert.n));
    prev = p;
    sum += static_cast<unsigned __int128>(p) * p;
  }
  if (sum != cert.n)
    throw InternalContradiction("certificate squares do not sum to n=" +
                                std::to_string(cert.n));
}

namespace {

Certificate make_cert(uint64_t n, uint64_t rho, std::vector<int64_t> raw,
                      Method method, bool minimal = false) {
  Certificate cert;
  cert.n = n;
  cert.rho = rho;
  cert.method = method;
  cert.minimal = minimal;
  for (int64_t v : raw) {
    uint64_t u = v < 0 ? static_cast<uint64_t>(-v) : static_cast<uint64_t>(v);
    if (u != 0) cert.parts.push_back(u);
  }
  std::sort(cert.parts.rbegin(), cert.parts.rend());
  validate_certificate(cert);
  return cert;
}

Certificate scaled_cert(uint64_t n, uint64_t rho, const std::vector<uint64_t>& base,
                        unsigned shift, Method method) {
  std::vector<int64_t> parts;
  for (uint64_t p : base) parts.push_back(static_cast<int64_t>(p << shift));
  return make_cert(n, rho, std::move(parts), method);
}

Certificate oracle_certificate(ForbiddenValue rho, uint64_t n,
                               const SweepConfig& config) {
  unsigned __int128 large =
      static_cast<unsigned __int128>(550) * rho.value * rho.value;
  if (n >= large) return represent_large(rho, n, config);
  Representation rep = minimal_representation(rho, n, config);
  Certificate cert;
  cert.n = n;
  cert.rho = rho.value;
  cert.parts = rep.parts;
  cert.method = Method::SmallCaseDp;
  cert.minimal = true;
  validate_certificate(cert);
  return cert;
}

}  // namespace

ScalingForm split_pow4(uint64_t n) {
  ScalingForm f{n, 0, n};
  while (f.l != 0 && f.l % 4 == 0) {
    f.l /= 4;
    ++f.e;
  }
  return f;
}

EvenScalingForm split_even_scaling(uint64_t n) {
  if (n == 0 || n % 8 != 0)
    throw std::invalid_argument("split_even_scaling requires 8 | n");
  unsigned v = static_cast<unsigned>(std::countr_zero(n));
  unsigned s = (v % 2 == 1) ? (v - 1) / 2 : (v - 2) / 2;
  EvenScalingForm f{n, s, n >> (2 * s)};
  if (f.t % 4 != 2 && f.t % 8 != 4)
    throw InternalContradiction("even scaling split failed");
  return f;
}

CauchyWitness cauchy_solve(int64_t a, int64_t b) {
  if (a <= 0 || a % 2 == 0)
    throw std::invalid_argument("cauchy_solve: a must be odd and positive");
  if (mod_floor(b, 2) != 1)
    throw std::invalid_argument("cauchy_solve: b must be odd");
  if (static_cast<__int128>(b) * b >= static_cast<__int128>(4) * a)
    throw std::invalid_argument("cauchy_solve: requires b^2 < 4a");
  if (a > 250000000000000000LL)
    throw std::range_error("cauchy_solve: 4a above the enumeration range");

  // 4a - b^2 = 3 mod 8, so each of the three squares below is odd.
  uint64_t d = static_cast<uint64_t>(4 * a - b * b);
  int64_t x = 0, y = 0, z = 0;
  bool found = visit_three_square_reps(d, [&](uint64_t tx, uint64_t ty, uint64_t tz) {
    x = static_cast<int64_t>(tx);
    y = static_cast<int64_t>(ty);
    z = static_cast<int64_t>(tz);
    return true;
  });
  if (!found || x % 2 == 0 || y % 2 == 0 || z % 2 == 0)
    throw InternalContradiction("cauchy_solve: no odd three-square split of " +
                                std::to_string(d));

  // b + x + y + z is even; flipping the smallest variable moves it by
  // 2z = 2 mod 4, which fixes the residue when it is 2 mod 4.
  if (mod_floor(b + x + y + z, 4) == 2) z = -z;
  if (mod_floor(b + x + y + z, 4) != 0)
    throw InternalContradiction("cauchy_solve: sign fix failed");

  CauchyWitness w;
  w.a = a;
  w.b = b;
  w.p = (b + x + y + z) / 4;
  w.q = (b + x - y - z) / 4;
  w.r = (b - x + y - z) / 4;
  w.s = (b - x - y + z) / 4;
  if (w.p + w.q + w.r + w.s != b ||
      w.p * w.p + w.q * w.q + w.r * w.r + w.s * w.s != a)
    throw InternalContradiction("cauchy_solve: witness check failed");
  return w;
}

ZeroSumQuadruple zero_sum_quadruple(uint64_t target) {
  if (target == 0 || target % 4 != 2)
    throw std::invalid_argument("zero_sum_quadruple requires target = 2 mod 4");
  if (target > 1000000000000000000ULL)
    throw std::range_error("zero_sum_quadruple: target above 10^18");
  int64_t lim = static_cast<int64_t>(isqrt(target));
  for (int64_t x = 0; x <= lim; ++x) {
    for (int64_t y = 0; y <= x; ++y) {
      // x^2 + y^2 + z^2 + (x+y+z)^2 = target, as a quadratic in z.
      int64_t sxy = x + y;
      __int128 disc = static_cast<__int128>(2) * target -
                      static_cast<__int128>(sxy) * sxy -
                      static_cast<__int128>(2) * (x * x + y * y);
      if (disc < 0) continue;
      uint64_t root;
      if (!is_perfect_square(static_cast<uint64_t>(disc), &root)) continue;
      if ((root + static_cast<uint64_t>(mod_floor(sxy, 2))) % 2 != 0) continue;
      int64_t z = (-sxy + static_cast<int64_t>(root)) / 2;  // larger root
      ZeroSumQuadruple q;
      q.x = x;
      q.y = y;
      q.z = z;
      q.w = -(x + y + z);
      q.target = target;
      return q;
    }
  }
  throw InternalContradiction("zero_sum_quadruple: no solution for " +
                              std::to_string(target));
}

Certificate represent_large(ForbiddenValue rho, uint64_t n,
                            const SweepConfig& config) {
  unsigned __int128 need =
      static_cast<unsigned __int128>(550) * rho.value * rho.value;
  if (n < need)
    throw std::invalid_argument("represent_large requires n >= 550 rho^2");

  if (n % 4 == 2) {
    uint64_t m = isqrt(n / 4);
    while (4 * m * m >= n) --m;
    while (4 * (m + 1) * (m + 1) < n) ++m;
    ZeroSumQuadruple q = zero_sum_quadruple(n - 4 * m * m);
    int64_t sm = static_cast<int64_t>(m);
    return make_cert(n, rho.value, {sm + q.x, sm + q.y, sm + q.z, sm + q.w},
                     Method::Large2Mod4);
  }
  if (n % 2 == 1) {
    uint64_t m = isqrt(n / 4);
    while (m > 0 && 4 * m * m + 2 * m >= n) --m;
    while (4 * (m + 1) * (m + 1) + 2 * (m + 1) < n) ++m;
    int64_t rest = static_cast<int64_t>(n - 4 * m * m - 2 * m);
    CauchyWitness w = cauchy_solve(rest, 1);
    int64_t sm = static_cast<int64_t>(m);
    return make_cert(n, rho.value, {sm + w.p, sm + w.q, sm + w.r, sm + w.s},
                     Method::LargeOdd);
  }

  // n = 0 mod 4: scale out fours. With rho = 2^k * rho' and n = 4^e * l,
  // parts 2^e * x have 2-adic valuation > k once e > k, so plain Lagrange
  // works; otherwise recurse on l with the forbidden value 2^(k-e) * rho'.
  unsigned k = static_cast<unsigned>(std::countr_zero(rho.value));
  ScalingForm f = split_pow4(n);
  if (f.e > k) {
    SquareQuadruple q = lagrange_four_squares(f.l);
    return make_cert(n, rho.value,
                     {static_cast<int64_t>(q.a << f.e), static_cast<int64_t>(q.b << f.e),
                      static_cast<int64_t>(q.c << f.e), static_cast<int64_t>(q.d << f.e)},
                     Method::LargeScale);
  }
  Certificate sub = represent_large(ForbiddenValue(rho.value >> f.e), f.l, config);
  Certificate cert = scaled_cert(n, rho.value, sub.parts, f.e, Method::LargeScale);
  return cert;
}

SquareTriple primitive_three_squares_mod3(uint64_t n) {
  if (n == 0) throw std::invalid_argument("primitive_three_squares_mod3: n >= 1");
  if (!is_sum_of_three_squares(n))
    throw std::invalid_argument("primitive_three_squares_mod3: n is not a sum of three squares");
  bool div3 = n % 3 == 0;
  SquareTriple out{0, 0, 0, n};
  bool found = visit_three_square_reps(n, [&](uint64_t x, uint64_t y, uint64_t z) {
    bool ok = div3 ? (x % 3 != 0 && y % 3 != 0 && z % 3 != 0)
                   : (x % 3 != 0 || y % 3 != 0 || z % 3 != 0);
    if (!ok) return false;
    out = {x, y, z, n};
    return true;
  });
  if (!found)
    throw InternalContradiction("primitive_three_squares_mod3: filter empty for " +
                                std::to_string(n));
  return out;
}

std::array<int64_t, 3> avoidance_transform(int64_t a0, int64_t a1, int64_t a2) {
  if (a0 == 0 || mod_floor(a0, 9) != 0)
    throw std::invalid_argument("avoidance_transform: a0 must be a nonzero multiple of 9");
  if (mod_floor(a1, 3) != 1)
    throw std::invalid_argument("avoidance_transform: a1 must be 1 mod 3");
  if (mod_floor(a2, 3) != 2)
    throw std::invalid_argument("avoidance_transform: a2 must be 2 mod 3");
  constexpr int64_t kMaxInput = 100000000;
  if (std::abs(a0) > kMaxInput || std::abs(a1) > kMaxInput || std::abs(a2) > kMaxInput)
    throw std::range_error("avoidance_transform: |a_i| above 10^8");

  auto sum_sq = [](int64_t u, int64_t v, int64_t w) {
    return static_cast<__int128>(u) * u + static_cast<__int128>(v) * v +
           static_cast<__int128>(w) * w;
  };
  __int128 total = sum_sq(a0, a1, a2);
  auto finish = [&](std::array<int64_t, 3> b) {
    if (sum_sq(b[0], b[1], b[2]) != total)
      throw InternalContradiction("avoidance_transform: sum of squares not preserved");
    return b;
  };
  auto hits_a0 = [&](const std::array<int64_t, 3>& b) {
    for (int64_t v : b)
      if (v == a0 || v == -a0) return true;
    return false;
  };

  int64_t m = (a0 + a1 + a2) / 3;
  std::array<int64_t, 3> b{2 * m - a0, 2 * m - a1, 2 * m - a2};
  if (!hits_a0(b)) return finish(b);

  int64_t mp = m - 2 * (a0 / 3);
  std::array<int64_t, 3> bp{2 * mp + a0, 2 * mp - a1, 2 * mp - a2};
  if (hits_a0(bp))
    throw InternalContradiction("avoidance_transform: second branch hit a0");
  return finish(bp);
}

namespace {

// Sign-fix a nonzero value v (v != 0 mod 3) to the residue r in {1, 2}.
int64_t to_residue(int64_t v, int64_t r) { return mod_floor(v, 3) == r ? v : -v; }

// One application of the avoidance transform to the triple (p0, p1, p2)
// where p0 = +-rho is the part to eliminate and p1, p2 are coprime to 3.
std::array<int64_t, 3> eliminate_part(int64_t p0, int64_t p1, int64_t p2) {
  return avoidance_transform(p0, to_residue(p1, 1), to_residue(p2, 2));
}

}  // namespace

Certificate rep_div9(ForbiddenValue rho, uint64_t n, const SweepConfig&) {
  if (rho.value % 9 != 0)
    throw std::invalid_argument("rep_div9 requires 9 | rho");
  if (n == 0) throw std::invalid_argument("rep_div9 requires n >= 1");
  const uint64_t r = rho.value;

  SquareQuadruple q = lagrange_four_squares(n);
  std::vector<uint64_t> parts{q.a, q.b, q.c, q.d};
  if (std::none_of(parts.begin(), parts.end(), [&](uint64_t p) { return p == r; })) {
    return make_cert(n, r,
                     {static_cast<int64_t>(q.a), static_cast<int64_t>(q.b),
                      static_cast<int64_t>(q.c), static_cast<int64_t>(q.d)},
                     Method::DivNine);
  }
  if (std::all_of(parts.begin(), parts.end(), [&](uint64_t p) { return p == r; })) {
    // n = 4 rho^2 = (2 rho)^2.
    return make_cert(n, r, {static_cast<int64_t>(2 * r)}, Method::DivNine);
  }

  auto cert_from = [&](std::vector<int64_t> raw) {
    return make_cert(n, r, std::move(raw), Method::DivNine);
  };

  if (n % 3 == 0) {
    // Drop the smallest part != rho; the remainder keeps a three-square
    // representation, repaired to avoid rho.
    uint64_t d = 0;
    bool have = false;
    std::vector<uint64_t> rest;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      if (!have && *it != r) {
        d = *it;
        have = true;
      } else {
        rest.push_back(*it);
      }
    }
    uint64_t m = n - d * d;
    if (m % 3 == 0) {
      SquareTriple t = primitive_three_squares_mod3(m);
      return cert_from({static_cast<int64_t>(d), static_cast<int64_t>(t.x),
                        static_cast<int64_t>(t.y), static_cast<int64_t>(t.z)});
    }
    // m = 2 mod 3: the remaining triple has exactly one part divisible by 3,
    // and it is the forbidden one when any is.
    uint64_t g0 = 0, g1 = 0, g2 = 0;
    for (uint64_t p : rest) {
      if (p % 3 == 0)
        g0 = p;
      else if (g1 == 0)
        g1 = p;
      else
        g2 = p;
    }
    if (g0 != r)
      return cert_from({static_cast<int64_t>(d), static_cast<int64_t>(g0),
                        static_cast<int64_t>(g1), static_cast<int64_t>(g2)});
    auto b = eliminate_part(static_cast<int64_t>(g0), static_cast<int64_t>(g1),
                            static_cast<int64_t>(g2));
    return cert_from({static_cast<int64_t>(d), b[0], b[1], b[2]});
  }

  if (n % 3 == 1) {
    // Exactly one part is coprime to 3 (it cannot be rho); dropping it
    // leaves a multiple of 3.
    uint64_t f = 0;
    std::vector<int64_t> kept;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      if (f == 0 && *it % 3 != 0)
        f = *it;
      else
        kept.push_back(static_cast<int64_t>(*it));
    }
    if (f == 0) throw InternalContradiction("rep_div9: no part coprime to 3");
    uint64_t m = n - f * f;
    if (m == 0) return cert_from({static_cast<int64_t>(f)});
    SquareTriple t = primitive_three_squares_mod3(m);
    return cert_from({static_cast<int64_t>(f), static_cast<int64_t>(t.x),
                      static_cast<int64_t>(t.y), static_cast<int64_t>(t.z)});
  }

  // n = 2 mod 3: exactly two parts divisible by 3.
  std::vector<uint64_t> z3, o3;
  for (uint64_t p : parts) (p % 3 == 0 ? z3 : o3).push_back(p);
  if (z3.size() != 2 || o3.size() != 2)
    throw InternalContradiction("rep_div9: unexpected mod-3 pattern");
  if (z3[0] != r && z3[1] != r) {
    return cert_from({static_cast<int64_t>(z3[0]), static_cast<int64_t>(z3[1]),
                      static_cast<int64_t>(o3[0]), static_cast<int64_t>(o3[1])});
  }
  uint64_t keep = z3[0] == r ? z3[1] : z3[0];
  auto first = eliminate_part(static_cast<int64_t>(r), static_cast<int64_t>(o3[0]),
                              static_cast<int64_t>(o3[1]));
  if (keep != r) {
    return cert_from({static_cast<int64_t>(keep), first[0], first[1], first[2]});
  }
  // Both multiples of 3 equal rho. After one transform, exactly one output
  // is divisible by 3; eliminating the second rho against the other two
  // outputs finishes the job.
  int64_t w0 = 0, w1 = 0, w2 = 0;
  for (int64_t v : first) {
    if (mod_floor(v, 3) == 0)
      w0 = v;
    else if (w1 == 0)
      w1 = v;
    else
      w2 = v;
  }
  auto second = eliminate_part(static_cast<int64_t>(r), w1, w2);
  return cert_from({w0, second[0], second[1], second[2]});
}

namespace {

// Role-split triples for the residue constructions. The residue class of
// the target forces the parity pattern, so the first canonical triple
// always fits; a mismatch is an internal bug.

struct OneOddTriple {
  uint64_t odd = 0;
  uint64_t even_a = 0;
  uint64_t even_b = 0;
};

OneOddTriple first_triple_one_odd(uint64_t m) {
  OneOddTriple t;
  bool found = visit_three_square_reps(m, [&](uint64_t x, uint64_t y, uint64_t z) {
    uint64_t odds = (x % 2) + (y % 2) + (z % 2);
    if (odds != 1) return false;
    int evens = 0;
    for (uint64_t v : {x, y, z}) {
      if (v % 2 == 1)
        t.odd = v;
      else
        (evens++ == 0 ? t.even_a : t.even_b) = v;
    }
    return true;
  });
  // The first canonical triple already matches; the filter is a guard.
  if (!found)
    throw InternalContradiction("one-odd triple missing for " + std::to_string(m));
  return t;
}

struct TwoOddTriple {
  uint64_t odd_a = 0;
  uint64_t odd_b = 0;
  uint64_t even = 0;
};

TwoOddTriple first_triple_two_odd(uint64_t m) {
  TwoOddTriple t;
  bool found = visit_three_square_reps(m, [&](uint64_t x, uint64_t y, uint64_t z) {
    uint64_t odds = (x % 2) + (y % 2) + (z % 2);
    if (odds != 2) return false;
    for (uint64_t v : {x, y, z}) {
      if (v % 2 == 0)
        t.even = v;
      else if (t.odd_a == 0)
        t.odd_a = v;
      else
        t.odd_b = v;
    }
    return true;
  });
  if (!found)
    throw InternalContradiction("two-odd triple missing for " + std::to_string(m));
  return t;
}

std::array<uint64_t, 3> first_triple_all_odd(uint64_t m) {
  std::array<uint64_t, 3> t{};
  bool found = visit_three_square_reps(m, [&](uint64_t x, uint64_t y, uint64_t z) {
    if (x % 2 == 0 || y % 2 == 0 || z % 2 == 0) return false;
    t = {x, y, z};
    return true;
  });
  if (!found)
    throw InternalContradiction("all-odd triple missing for " + std::to_string(m));
  return t;
}

// First canonical two-square split of m with both members different from
// `bad`.
std::pair<uint64_t, uint64_t> two_square_split_avoiding(uint64_t m, uint64_t bad) {
  for (const TwoSquareRep& rep : enumerate_two_square_reps(m)) {
    if (rep.s != bad && rep.t != bad) return {rep.s, rep.t};
  }
  throw InternalContradiction("no two-square split of " + std::to_string(m) +
                              " avoiding " + std::to_string(bad));
}

// Shared engine for rho = mu * 2^(a+1) with mu in {1, 3}. The residue
// cases subtract squares of mu * 2^j and repair a hit on rho with the
// exact identity
//
//   (rho - mu 2^j)^2 + (mu 2^((a+j+2)/2))^2 = rho^2 + (mu 2^j)^2
//
// which needs a + j even.
Certificate pow2_family(uint64_t mu, uint32_t a, uint64_t n,
                        const SweepConfig& config);

bool family_exceptional(uint64_t mu, uint32_t a, uint64_t n) {
  unsigned __int128 rho = static_cast<unsigned __int128>(mu) << (a + 1);
  unsigned __int128 rho_sq = rho * rho;
  if (mu == 3) return n == 14 * (rho_sq / 9);
  for (uint64_t c : {2, 6, 10, 14, 30, 46})
    if (n == c * rho_sq) return true;
  for (uint64_t c : {6, 14, 22, 30})
    if (n == c * (rho_sq / 4)) return true;
  return false;
}

// Five-part witnesses for the exceptional values: every one of them is a
// power-of-four multiple of a small value whose own forbidden-value problem
// (rho = 4 for mu = 1, rho = 6 for mu = 3) needs exactly five squares;
// scaling by 2^j turns "part != 4 (resp. 6)" into "part != rho".
Certificate five_part_schema(uint64_t mu, uint32_t a, uint64_t n,
                             const SweepConfig& config) {
  unsigned j = mu == 1 ? a - 1 : a;
  uint64_t base_rho = mu == 1 ? 4 : 6;
  uint64_t u = n >> (2 * j);
  if ((u << (2 * j)) != n)
    throw InternalContradiction("five_part_schema: bad scaling");
  Representation rep = minimal_representation(ForbiddenValue(base_rho), u, config);
  if (rep.parts.size() != 5)
    throw InternalContradiction("five_part_schema: base witness is not 5 parts");
  return scaled_cert(n, mu << (a + 1), rep.parts, j,
                     mu == 1 ? Method::PowTwo : Method::ThreePowTwo);
}

Certificate pow2_family(uint64_t mu, uint32_t a, uint64_t n,
                        const SweepConfig& config) {
  const uint64_t rho = mu << (a + 1);
  const Method tag = mu == 1 ? Method::PowTwo : Method::ThreePowTwo;
  const auto c = [&](unsigned j) { return mu << j; };
  const auto ident_part = [&](unsigned j) { return mu << ((a + j + 2) / 2); };

  if (a >= 7 && family_exceptional(mu, a, n))
    return five_part_schema(mu, a, n, config);
  if (a <= 6 || n < 65536)
    return oracle_certificate(ForbiddenValue(rho), n, config);

  const auto mk = [&](std::vector<int64_t> raw) {
    return make_cert(n, rho, std::move(raw), tag);
  };
  const auto i64 = [](uint64_t v) { return static_cast<int64_t>(v); };

  switch (n % 8) {
    case 3: {
      auto t = first_triple_all_odd(n);
      return mk({i64(t[0]), i64(t[1]), i64(t[2])});
    }
    case 7: {
      auto t = first_triple_all_odd(n - c(1) * c(1));
      return mk({i64(t[0]), i64(t[1]), i64(t[2]), i64(c(1))});
    }
    case 1: {
      if (a % 2 == 1) {
        // n - (mu 2)^2 = 5 mod 8: pattern (odd, 2 mod 4, 0 mod 4); only
        // the 0 mod 4 slot can hit rho.
        OneOddTriple t = first_triple_one_odd(n - c(1) * c(1));
        uint64_t z0 = t.even_a % 4 == 0 ? t.even_a : t.even_b;
        uint64_t y2 = t.even_a % 4 == 0 ? t.even_b : t.even_a;
        if (z0 != rho) return mk({i64(t.odd), i64(y2), i64(z0), i64(c(1))});
        return mk({i64(t.odd), i64(y2), i64(rho - c(1)), i64(ident_part(1))});
      }
      // a even: subtract (mu 4)^2, then (mu 16)^2, then split a two-square
      // factor when both even slots insist on rho.
      OneOddTriple t2 = first_triple_one_odd(n - c(2) * c(2));
      int hits2 = (t2.even_a == rho) + (t2.even_b == rho);
      if (hits2 == 0)
        return mk({i64(t2.odd), i64(t2.even_a), i64(t2.even_b), i64(c(2))});
      if (hits2 == 1) {
        uint64_t other = t2.even_a == rho ? t2.even_b : t2.even_a;
        return mk({i64(t2.odd), i64(other), i64(rho - c(2)), i64(ident_part(2))});
      }
      OneOddTriple t4 = first_triple_one_odd(n - c(4) * c(4));
      int hits4 = (t4.even_a == rho) + (t4.even_b == rho);
      if (hits4 == 0)
        return mk({i64(t4.odd), i64(t4.even_a), i64(t4.even_b), i64(c(4))});
      if (hits4 == 1) {
        uint64_t other = t4.even_a == rho ? t4.even_b : t4.even_a;
        return mk({i64(t4.odd), i64(other), i64(rho - c(4)), i64(ident_part(4))});
      }
      // n = x2^2 + 2 rho^2 + (4 mu)^2 = x4^2 + 2 rho^2 + (16 mu)^2 with
      // a = 2b, b >= 4. One of 2b-2, 2b-4 has an odd prime factor, so
      // 2^(2b-2)+1 (resp. 2^(2b-4)+1) has a two-square split away from the
      // power of two, giving
      //   n = x^2 + (rho - 4 mu)^2 + (mu 2^(b+2) s)^2 + (mu 2^(b+2) t)^2.
      {
        uint32_t b = a / 2;
        if (!std::has_single_bit(uint64_t{2} * b - 2)) {
          uint64_t m2 = (uint64_t{1} << (2 * b - 2)) + 1;
          auto [sv, tv] = two_square_split_avoiding(m2, uint64_t{1} << (b - 1));
          return mk({i64(t2.odd), i64(rho - 4 * mu), i64((mu << (b + 2)) * sv),
                     i64((mu << (b + 2)) * tv)});
        }
        uint64_t m4 = (uint64_t{1} << (2 * b - 4)) + 1;
        auto [sv, tv] = two_square_split_avoiding(m4, uint64_t{1} << (b - 2));
        return mk({i64(t4.odd), i64(rho - 16 * mu), i64((mu << (b + 3)) * sv),
                   i64((mu << (b + 3)) * tv)});
      }
    }
    case 5: {
      unsigned j = a % 2 == 0 ? 2 : 3;
      OneOddTriple t = first_triple_one_odd(n - c(j) * c(j));
      uint64_t z0 = t.even_a % 4 == 0 ? t.even_a : t.even_b;
      uint64_t y2 = t.even_a % 4 == 0 ? t.even_b : t.even_a;
      if (z0 != rho) return mk({i64(t.odd), i64(y2), i64(z0), i64(c(j))});
      return mk({i64(t.odd), i64(y2), i64(rho - c(j)), i64(ident_part(j))});
    }
    case 2:
    case 6: {
      TwoOddTriple t1 = first_triple_two_odd(n - c(1) * c(1));
      if (t1.even != rho)
        return mk({i64(t1.odd_a), i64(t1.odd_b), i64(t1.even), i64(c(1))});
      TwoOddTriple t2 = first_triple_two_odd(n - c(2) * c(2));
      if (t2.even != rho)
        return mk({i64(t2.odd_a), i64(t2.odd_b), i64(t2.even), i64(c(2))});
      unsigned j = a % 2 == 1 ? 1 : 2;
      const TwoOddTriple& tj = j == 1 ? t1 : t2;
      return mk({i64(tj.odd_a), i64(tj.odd_b), i64(rho - c(j)), i64(ident_part(j))});
    }
    case 4: {
      // n = 4 mod 8 is a sum of four odd squares.
      uint64_t x = isqrt(n - 3);
      if (x % 2 == 0) --x;
      auto t = first_triple_all_odd(n - x * x);
      return mk({i64(x), i64(t[0]), i64(t[1]), i64(t[2])});
    }
    default: {  // 0 mod 8
      EvenScalingForm f = split_even_scaling(n);
      if (f.s >= a + 2) {
        SquareQuadruple q = lagrange_four_squares(f.t);
        return scaled_cert(n, rho, {q.a, q.b, q.c, q.d}, f.s, tag);
      }
      if (f.s + 2 <= a) {
        Certificate sub = pow2_family(mu, a - f.s, f.t, config);
        return scaled_cert(n, rho, sub.parts, f.s, tag);
      }
      // s in {a-1, a, a+1}: the scaled problem has the small forbidden
      // value mu * 2^(a+1-s); its exceptional cases correspond exactly to
      // n in N(rho), which was excluded above.
      uint64_t sub_rho = mu << (a + 1 - f.s);
      Certificate sub = oracle_certificate(ForbiddenValue(sub_rho), f.t, config);
      if (sub.parts.size() > 4)
        throw InternalContradiction("pow2_family: unexpected 5-part scaled witness");
      return scaled_cert(n, rho, sub.parts, f.s, tag);
    }
  }
}

}  // namespace

Certificate rep_pow2(ForbiddenValue rho, uint64_t n, const SweepConfig& config) {
  RhoClass cls = classify_rho(rho);
  if (cls.kind != RhoClass::Kind::PowerOfTwo)
    throw std::invalid_argument("rep_pow2 requires rho = 2^(a+1) with a >= 2");
  if (n == 0) throw std::invalid_argument("rep_pow2 requires n >= 1");
  return pow2_family(1, cls.a, n, config);
}

Certificate rep_3pow2(ForbiddenValue rho, uint64_t n, const SweepConfig& config) {
  RhoClass cls = classify_rho(rho);
  if (cls.kind != RhoClass::Kind::ThreeTimesPowerOfTwo)
    throw std::invalid_argument("rep_3pow2 requires rho = 3 * 2^(a+1)");
  if (n == 0) throw std::invalid_argument("rep_3pow2 requires n >= 1");
  return pow2_family(3, cls.a, n, config);
}

Certificate rep_prime_gt3(ForbiddenValue rho, uint64_t n, const SweepConfig&) {
  if (rho.value < 6 || classify_rho(rho).kind != RhoClass::Kind::HasPrimeDivisorGt3)
    throw std::invalid_argument("rep_prime_gt3 requires rho >= 6 with a prime divisor > 3");
  if (n == 0) throw std::invalid_argument("rep_prime_gt3 requires n >= 1");
  const uint64_t r = rho.value;

  if (n == 79) {
    // The only value whose four-square representations are this scarce;
    // all three of them are pinned.
    static constexpr uint64_t kSeventyNine[3][4] = {
        {7, 5, 2, 1}, {5, 5, 5, 2}, {6, 5, 3, 3}};
    for (const auto& quad : kSeventyNine) {
      if (quad[0] != r && quad[1] != r && quad[2] != r && quad[3] != r) {
        return make_cert(n, r,
                         {static_cast<int64_t>(quad[0]), static_cast<int64_t>(quad[1]),
                          static_cast<int64_t>(quad[2]), static_cast<int64_t>(quad[3])},
                         Method::PrimeGt3);
      }
    }
  }

  constexpr uint64_t kSearchCap = 200000000;
  uint64_t steps = 0;
  for (uint64_t d = 0; 4 * d * d <= n; ++d) {
    if (d == r) continue;
    uint64_t r3 = n - d * d;
    for (uint64_t cpart = d; 3 * cpart * cpart <= r3; ++cpart) {
      if (cpart == r) continue;
      uint64_t r2 = r3 - cpart * cpart;
      if (!maybe_sum_of_two_squares(r2)) continue;
      for (uint64_t b = cpart; 2 * b * b <= r2; ++b) {
        if (b == r) continue;
        if (++steps > kSearchCap)
          throw InternalContradiction("rep_prime_gt3: search cap exceeded");
        uint64_t apart;
        if (is_perfect_square(r2 - b * b, &apart) && apart >= b && apart != r) {
          return make_cert(n, r,
                           {static_cast<int64_t>(apart), static_cast<int64_t>(b),
                            static_cast<int64_t>(cpart), static_cast<int64_t>(d)},
                           Method::PrimeGt3);
        }
      }
    }
  }
  throw InternalContradiction("rep_prime_gt3: no four-square representation found");
}

Certificate represent_avoiding(ForbiddenValue rho, uint64_t n,
                               const SweepConfig& config) {
  if (n == 0) throw std::invalid_argument("represent_avoiding requires n >= 1");
  unsigned __int128 large =
      static_cast<unsigned __int128>(550) * rho.value * rho.value;
  if (n < large && n <= config.max_entries) {
    Representation rep = minimal_representation(rho, n, config);
    Certificate cert;
    cert.n = n;
    cert.rho = rho.value;
    cert.parts = rep.parts;
    cert.method = Method::SmallCaseDp;
    cert.minimal = true;
    validate_certificate(cert);
    return cert;
  }
  switch (classify_rho(rho).kind) {
    case RhoClass::Kind::SmallCase:
      return represent_large(rho, n, config);
    case RhoClass::Kind::HasPrimeDivisorGt3:
      return rep_prime_gt3(rho, n, config);
    case RhoClass::Kind::PowerOfTwo:
      return rep_pow2(rho, n, config);
    case RhoClass::Kind::ThreeTimesPowerOfTwo:
      return rep_3pow2(rho, n, config);
    case RhoClass::Kind::NineDivides:
      return rep_div9(rho, n, config);
  }
  throw std::logic_error("unreachable");
}

}  // namespace fsq
