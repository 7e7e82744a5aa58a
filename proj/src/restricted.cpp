#include "fsq/restricted.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "fsq/classical.hpp"
#include "fsq/kernels.hpp"

namespace fsq {

namespace {
constexpr uint8_t kInf = 255;
}

void Representation::validate() const {
  unsigned __int128 sum = 0;
  uint64_t prev = UINT64_MAX;
  for (uint64_t p : parts) {
    if (p == 0 || p == rho || p > prev)
      throw InternalContradiction("invalid representation part for n=" +
                                  std::to_string(n));
    prev = p;
    sum += static_cast<unsigned __int128>(p) * p;
  }
  if (sum != n)
    throw InternalContradiction("representation squares do not sum to n=" +
                                std::to_string(n));
}

KValue SweepReport::k_of(uint64_t n) const {
  if (n > bound) throw std::out_of_range("k_of: n beyond sweep bound");
  uint8_t v = kvals[n];
  return v == kInf ? KValue::infinity() : KValue::finite(v);
}

namespace {

std::vector<uint8_t> run_dp(uint64_t rho, uint64_t bound) {
  std::vector<uint8_t> k(bound + 1, kInf);
  k[0] = 0;
  auto relax = kernels::active_relax();
  uint64_t smax = isqrt(bound);
  for (uint64_t s = 1; s <= smax; ++s) {
    if (s == rho) continue;
    relax(k.data(), bound + 1, s * s);
  }
  return k;
}

struct ScanPart {
  std::map<unsigned, std::vector<uint64_t>> exceptional;
  std::vector<uint64_t> infinite;
  unsigned max_finite_k = 0;
};

ScanPart scan_block(const std::vector<uint8_t>& k, uint64_t lo, uint64_t hi) {
  ScanPart part;
  for (uint64_t n = lo; n <= hi; ++n) {
    uint8_t v = k[n];
    if (v == kInf) {
      part.infinite.push_back(n);
    } else {
      if (v > part.max_finite_k) part.max_finite_k = v;
      if (v >= 5) part.exceptional[v].push_back(n);
    }
  }
  return part;
}

void merge_into(ScanPart& acc, ScanPart&& next) {
  for (auto& [kv, list] : next.exceptional) {
    auto& dst = acc.exceptional[kv];
    dst.insert(dst.end(), list.begin(), list.end());
  }
  acc.infinite.insert(acc.infinite.end(), next.infinite.begin(),
                      next.infinite.end());
  acc.max_finite_k = std::max(acc.max_finite_k, next.max_finite_k);
}

SweepReport build_report(uint64_t rho, uint64_t bound,
                         std::vector<uint8_t> kvals, unsigned jobs) {
  SweepReport report;
  report.rho = rho;
  report.bound = bound;
  if (jobs < 1) jobs = 1;
  if (jobs > bound) jobs = static_cast<unsigned>(bound);

  ScanPart total;
  if (jobs == 1) {
    total = scan_block(kvals, 1, bound);
  } else {
    // Workers scan disjoint blocks of the immutable table; merging partial
    // results in block order keeps the outcome independent of the worker
    // count.
    std::vector<ScanPart> parts(jobs);
    std::vector<std::thread> threads;
    uint64_t chunk = (bound + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      uint64_t lo = 1 + w * chunk;
      uint64_t hi = std::min(bound, lo + chunk - 1);
      if (lo > bound) break;
      threads.emplace_back(
          [&, w, lo, hi] { parts[w] = scan_block(kvals, lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (auto& p : parts) merge_into(total, std::move(p));
  }

  report.kvals = std::move(kvals);
  report.exceptional = std::move(total.exceptional);
  report.infinite = std::move(total.infinite);
  report.max_finite_k = total.max_finite_k;
  report.infinite_list_complete = rho >= 2 || bound >= 550;
  return report;
}

}  // namespace

SweepReport sweep(ForbiddenValue rho, uint64_t bound, const SweepConfig& config) {
  if (bound < 1) throw std::invalid_argument("sweep requires bound >= 1");
  if (bound > config.max_entries)
    throw std::range_error("sweep bound " + std::to_string(bound) +
                           " exceeds configured ceiling " +
                           std::to_string(config.max_entries));
  return build_report(rho.value, bound, run_dp(rho.value, bound), config.jobs);
}

SweepReport report_from_kvals(ForbiddenValue rho, uint64_t bound,
                              std::vector<uint8_t> kvals, unsigned jobs) {
  if (kvals.size() < bound + 1)
    throw std::invalid_argument("report_from_kvals: table shorter than bound");
  kvals.resize(bound + 1);
  return build_report(rho.value, bound, std::move(kvals), jobs);
}

namespace {

// Is t a sum of exactly m squares of integers in [1, cap] \ {rho}?
// Parts are chosen in descending order; the first witness found is the
// lexicographically largest descending sequence.
bool dfs_exact(uint64_t t, unsigned m, uint64_t cap, uint64_t rho,
               std::vector<uint64_t>* parts) {
  if (m == 0) return t == 0;
  if (t < m) return false;  // every part contributes at least 1
  if (m == 1) {
    uint64_t r;
    if (!is_perfect_square(t, &r) || r < 1 || r > cap || r == rho) return false;
    if (parts) parts->push_back(r);
    return true;
  }
  if (m == 3 && !is_sum_of_three_squares(t)) return false;
  uint64_t s = isqrt(t);
  if (s > cap) s = cap;
  for (; s >= 1; --s) {
    if (s == rho) continue;
    if (static_cast<unsigned __int128>(s) * s * m < t) break;
    if (parts) parts->push_back(s);
    if (dfs_exact(t - s * s, m - 1, s, rho, parts)) return true;
    if (parts) parts->pop_back();
  }
  return false;
}

}  // namespace

KValue min_squares_avoiding(ForbiddenValue rho, uint64_t n,
                            const SweepConfig& config) {
  if (n == 0) return KValue::finite(0);
  if (n > config.max_entries)
    throw std::range_error("min_squares_avoiding: n exceeds configured ceiling");
  uint64_t cap = predicted_M(rho) + 2;
  for (uint64_t m = 1; m <= cap && m <= n; ++m) {
    if (dfs_exact(n, static_cast<unsigned>(m), n, rho.value, nullptr))
      return KValue::finite(m);
  }
  if (rho.value == 1) return KValue::infinity();
  // Unreachable for a correct deepening cap; the all-ones representation
  // still bounds the search for rho >= 2.
  for (uint64_t m = cap + 1; m <= n; ++m) {
    if (dfs_exact(n, static_cast<unsigned>(m), n, rho.value, nullptr))
      return KValue::finite(m);
  }
  throw InternalContradiction("no representation found for rho >= 2");
}

namespace {
// Above this, the witness comes from iterative deepening instead of an
// O(n) table; both routes are minimal and deterministic.
constexpr uint64_t kWitnessDpLimit = 1000000;
}  // namespace

Representation minimal_representation(ForbiddenValue rho, uint64_t n,
                                      const SweepConfig& config) {
  Representation rep;
  rep.n = n;
  rep.rho = rho.value;
  if (n == 0) return rep;
  if (n > config.max_entries)
    throw std::range_error("minimal_representation: n exceeds configured ceiling");
  if (n > kWitnessDpLimit) {
    KValue k = min_squares_avoiding(rho, n, config);
    if (k.is_infinite()) throw InfiniteKError(rho.value, n);
    if (!dfs_exact(n, static_cast<unsigned>(k.value()), n, rho.value, &rep.parts))
      throw InternalContradiction("deepening witness extraction failed");
    std::sort(rep.parts.rbegin(), rep.parts.rend());
    rep.validate();
    return rep;
  }
  std::vector<uint8_t> k = run_dp(rho.value, n);
  if (k[n] == kInf) throw InfiniteKError(rho.value, n);
  uint64_t cur = n;
  while (cur > 0) {
    bool found = false;
    uint64_t smax = isqrt(cur);
    for (uint64_t s = 1; s <= smax; ++s) {
      if (s == rho.value) continue;
      if (k[cur - s * s] == k[cur] - 1) {
        rep.parts.push_back(s);
        cur -= s * s;
        found = true;
        break;
      }
    }
    if (!found)
      throw InternalContradiction("witness backtracking failed at " +
                                  std::to_string(cur));
  }
  std::sort(rep.parts.rbegin(), rep.parts.rend());
  rep.validate();
  return rep;
}

std::vector<uint64_t> i_set(ForbiddenValue rho, uint64_t bound,
                            const SweepConfig& config) {
  if (bound < 1) throw std::invalid_argument("i_set requires bound >= 1");
  if (rho.value >= 2) return {};
  return sweep(rho, bound, config).infinite;
}

uint64_t compute_M(ForbiddenValue rho, const SweepConfig& config) {
  unsigned __int128 lim =
      static_cast<unsigned __int128>(550) * rho.value * rho.value;
  if (lim > config.max_entries)
    throw std::range_error("compute_M: 550*rho^2 exceeds configured ceiling");
  SweepReport report = sweep(rho, static_cast<uint64_t>(lim) - 1, config);
  return std::max<uint64_t>(4, report.max_finite_k);
}

uint64_t predicted_M(ForbiddenValue rho) {
  uint64_t r = rho.value;
  if (r == 2) return 8;
  if (r == 1 || r == 3) return 6;
  if (r == 5) return 5;
  if (r >= 4 && std::has_single_bit(r)) return 5;          // 2^(m+1), m >= 1
  if (r >= 6 && r % 3 == 0 && std::has_single_bit(r / 3)) return 5;  // 3*2^m
  return 4;
}

RhoClass classify_rho(ForbiddenValue rho) {
  uint64_t r = rho.value;
  if (r <= 5) return {RhoClass::Kind::SmallCase};
  uint32_t s = 0, t = 0;
  uint64_t rest = r;
  while (rest % 2 == 0) {
    rest /= 2;
    ++s;
  }
  while (rest % 3 == 0) {
    rest /= 3;
    ++t;
  }
  if (rest > 1) return {RhoClass::Kind::HasPrimeDivisorGt3};
  if (t >= 2) return {RhoClass::Kind::NineDivides, 0, s, t};
  if (t == 1) return {RhoClass::Kind::ThreeTimesPowerOfTwo, s - 1, s, t};
  return {RhoClass::Kind::PowerOfTwo, s - 1, s, t};
}

namespace {

// Bitset helper: dst |= src << shift, truncated to dst's length.
void or_shifted(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src,
                uint64_t shift) {
  size_t words = dst.size();
  size_t word_shift = shift / 64;
  unsigned bit_shift = shift % 64;
  for (size_t i = words; i-- > word_shift;) {
    uint64_t v = src[i - word_shift] << bit_shift;
    if (bit_shift && i > word_shift)
      v |= src[i - word_shift - 1] >> (64 - bit_shift);
    dst[i] |= v;
  }
}

// Bitset of {n <= bound : n is a sum of exactly k nonzero squares}.
std::vector<uint64_t> exact_k_squares_bitset(uint64_t k, uint64_t bound) {
  size_t words = bound / 64 + 1;
  std::vector<uint64_t> layer(words, 0);
  std::vector<uint64_t> squares;
  for (uint64_t s = 1; s * s <= bound; ++s) squares.push_back(s * s);
  for (uint64_t q : squares)
    if (q <= bound) layer[q / 64] |= uint64_t{1} << (q % 64);
  for (uint64_t step = 1; step < k; ++step) {
    std::vector<uint64_t> next(words, 0);
    for (uint64_t q : squares) or_shifted(next, layer, q);
    layer = std::move(next);
  }
  return layer;
}

bool bit_at(const std::vector<uint64_t>& bits, uint64_t n) {
  return (bits[n / 64] >> (n % 64)) & 1;
}

}  // namespace

bool representable_as_k_nonzero_squares(uint64_t k, uint64_t n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("representable_as_k_nonzero_squares requires k, n >= 1");
  if (n < k) return false;
  if (n > 100000000)
    throw std::range_error("representable_as_k_nonzero_squares: n above DP range");
  return bit_at(exact_k_squares_bitset(k, n), n);
}

std::vector<uint64_t> dubouis_exception_set(uint64_t k, uint64_t bound) {
  if (k < 4) throw std::invalid_argument("dubouis_exception_set requires k >= 4");
  if (bound < 1) throw std::invalid_argument("dubouis_exception_set requires bound >= 1");
  auto bits = exact_k_squares_bitset(k, bound);
  std::vector<uint64_t> out;
  for (uint64_t n = 1; n <= bound; ++n)
    if (!bit_at(bits, n)) out.push_back(n);
  return out;
}

std::vector<uint64_t> dubouis_closed_form(uint64_t k, uint64_t bound) {
  if (k < 4) throw std::invalid_argument("dubouis_closed_form requires k >= 4");
  std::vector<uint64_t> out;
  if (k == 4) {
    out = {1, 2, 3, 5, 6, 8, 9, 11, 14, 17, 29, 41};
    for (uint64_t base : {uint64_t{2}, uint64_t{6}, uint64_t{14}})
      for (unsigned __int128 v = base; v <= bound; v *= 4)
        out.push_back(static_cast<uint64_t>(v));
  } else if (k == 5) {
    out = {1, 2, 3, 4, 6, 7, 9, 10, 12, 15, 18, 33};
  } else {
    for (uint64_t i = 1; i <= k - 1; ++i) out.push_back(i);
    for (uint64_t d : {uint64_t{1}, uint64_t{2}, uint64_t{4}, uint64_t{5},
                       uint64_t{7}, uint64_t{10}, uint64_t{13}})
      out.push_back(k + d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](uint64_t n) { return n > bound; });
  return out;
}

}  // namespace fsq
