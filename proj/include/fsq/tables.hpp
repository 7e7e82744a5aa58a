#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsq/restricted.hpp"

// Embedded ground-truth tables of exceptional k values and the harness that
// diffs oracle sweeps against them. The data lives in source as literal
// constants so it cannot drift silently; the acceptance suite re-derives
// every entry from the sweep oracle.

namespace fsq {

// Exceptional k values for one rho; every unlisted n is expected to have a
// finite k <= 4.
struct ExpectedTable {
  std::string id;
  uint64_t rho = 0;
  std::map<uint64_t, KValue> entries;
  // Largest listed n; sweeps must reach at least this far to be comparable.
  uint64_t max_entry() const {
    return entries.empty() ? 0 : entries.rbegin()->first;
  }
};

struct Mismatch {
  uint64_t n = 0;
  std::string expected;
  std::string computed;
};

struct DiffReport {
  std::string table_id;
  std::vector<Mismatch> mismatches;
  bool pass = false;
};

// The exceptional map for rho in 1..5, including the infinite entries for
// rho = 1.
ExpectedTable expected_small_rho_table(uint64_t rho);

// The exceptional set N(rho): ten values for rho = 2^(a+1) (a >= 2), the
// single value 14 * 2^(2a+2) for rho = 3 * 2^(a+1).
std::vector<uint64_t> expected_N(uint64_t rho);

// The expected table for any supported rho: the small-rho data for 1..5,
// N(rho) |-> 5 for the two power-of-two families.
ExpectedTable expected_table_for(uint64_t rho);

// Sweeps [1, bound] and diffs against the table: listed n must match
// exactly, unlisted n must be finite with k <= 4.
DiffReport verify_table(const ExpectedTable& table, uint64_t bound,
                        const SweepConfig& config = {});
DiffReport verify_table(uint64_t rho, uint64_t bound,
                        const SweepConfig& config = {});

}  // namespace fsq
