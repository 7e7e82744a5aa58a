#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsq/common.hpp"

// Exact computation of k_rho(n) (the minimum number of squares of
// nonnegative integers != rho summing to n), range sweeps, I(rho), M(rho),
// Dubouis exception sets and the classification of rho that drives
// constructive dispatch.

namespace fsq {

// k_rho(n): a nonnegative count, or infinity when no representation exists
// (possible only for rho = 1).
class KValue {
 public:
  static KValue finite(uint64_t k) { return KValue(k); }
  static KValue infinity() { return KValue(); }

  bool is_infinite() const { return !k_.has_value(); }
  uint64_t value() const {
    if (is_infinite()) throw std::logic_error("KValue: infinite has no value");
    return *k_;
  }
  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(*k_);
  }
  friend bool operator==(const KValue& a, const KValue& b) {
    return a.k_ == b.k_;
  }

 private:
  KValue() = default;
  explicit KValue(uint64_t k) : k_(k) {}
  std::optional<uint64_t> k_;
};

// A multiset of allowed parts witnessing n; parts are >= 1, != rho, stored
// descending. Zero parts are dropped (removing one shortens a
// representation, so minimal witnesses never contain them).
struct Representation {
  uint64_t n = 0;
  uint64_t rho = 0;
  std::vector<uint64_t> parts;
  void validate() const;  // throws InternalContradiction on violation
};

// Sweep memory guard and worker count. Results never depend on `jobs`.
struct SweepConfig {
  uint64_t max_entries = 100000000;  // 10^8 k-values
  unsigned jobs = 1;
};

// Exact k_rho(n) for all 1 <= n <= bound. kvals[n] holds min(k_rho(n), 255)
// with 255 meaning "infinite": every finite k value is classically below 21
// for rho >= 2 (replace each forbidden part of a four-square representation
// by at most five smaller ones) and below 8 for rho = 1 beyond n = 27, so
// the 8-bit saturation is exact.
struct SweepReport {
  uint64_t rho = 0;
  uint64_t bound = 0;
  std::vector<uint8_t> kvals;  // index 0..bound
  std::map<unsigned, std::vector<uint64_t>> exceptional;  // k >= 5 only
  std::vector<uint64_t> infinite;
  unsigned max_finite_k = 0;
  // True when the infinite list is provably all of I(rho): trivially for
  // rho >= 2 (it is empty), and for rho = 1 once bound >= 550 since every
  // n >= 550 has a four-square representation avoiding 1.
  bool infinite_list_complete = false;

  KValue k_of(uint64_t n) const;
};

// The classification of rho >= 1 into the five mutually exclusive cases
// that select a construction.
struct RhoClass {
  enum class Kind {
    SmallCase,             // rho <= 5
    HasPrimeDivisorGt3,    // some prime >= 5 divides rho
    PowerOfTwo,            // rho = 2^(a+1), a >= 2
    ThreeTimesPowerOfTwo,  // rho = 3 * 2^(a+1), a >= 0
    NineDivides,           // rho = 2^s * 3^t, t >= 2
  };
  Kind kind;
  uint32_t a = 0;          // exponent for the two power-of-two kinds
  uint32_t two_exp = 0;    // s and t for NineDivides
  uint32_t three_exp = 0;
};

// Exact k_rho(n) for a single query. Uses iterative deepening (no O(n)
// tables), capped by predicted_M(rho) + 2 before extending to the all-ones
// bound. Returns Finite(0) for n = 0.
KValue min_squares_avoiding(ForbiddenValue rho, uint64_t n,
                            const SweepConfig& config = {});

// Batched oracle: dynamic programming over the allowed squares, then a
// block-partitioned scan (associative merge, identical results for any
// worker count).
SweepReport sweep(ForbiddenValue rho, uint64_t bound,
                  const SweepConfig& config = {});

// A minimal witness extracted from the sweep table, smallest part chosen
// first while backtracking, then canonicalized descending. Throws
// InfiniteKError when k_rho(n) is infinite.
Representation minimal_representation(ForbiddenValue rho, uint64_t n,
                                      const SweepConfig& config = {});

// Rebuilds the derived report fields from an existing k-value table
// (index 0..bound). Used by the sweep cache; the DP table for a larger
// bound restricts to a prefix without change.
SweepReport report_from_kvals(ForbiddenValue rho, uint64_t bound,
                              std::vector<uint8_t> kvals, unsigned jobs = 1);

// {n <= bound : k_rho(n) = infinity}; empty for rho >= 2 since 1 is allowed.
std::vector<uint64_t> i_set(ForbiddenValue rho, uint64_t bound,
                            const SweepConfig& config = {});

// Exact M(rho) = max finite k_rho(n): every n >= 550 rho^2 needs at most
// four squares, so the maximum over the sweep below that point is global.
uint64_t compute_M(ForbiddenValue rho, const SweepConfig& config = {});

// The closed form for M(rho); pure arithmetic, no search.
uint64_t predicted_M(ForbiddenValue rho);

RhoClass classify_rho(ForbiddenValue rho);

// True iff n = x_1^2 + ... + x_k^2 with every x_i >= 1; decided by a DP over
// exact part counts.
bool representable_as_k_nonzero_squares(uint64_t k, uint64_t n);

// {n <= bound : n is not a sum of exactly k nonzero squares}, k >= 4.
std::vector<uint64_t> dubouis_exception_set(uint64_t k, uint64_t bound);

// The classical closed form E_k intersected with [1, bound], for comparison
// against the DP (E_4 includes the three geometric families 2*4^m, 6*4^m,
// 14*4^m).
std::vector<uint64_t> dubouis_closed_form(uint64_t k, uint64_t bound);

}  // namespace fsq
