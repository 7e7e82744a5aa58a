#include "fsq/tables.hpp"

#include <algorithm>

namespace fsq {

namespace {

void put(ExpectedTable& t, std::initializer_list<uint64_t> ns, uint64_t k) {
  for (uint64_t n : ns) t.entries.emplace(n, KValue::finite(k));
}

void put_inf(ExpectedTable& t, std::initializer_list<uint64_t> ns) {
  for (uint64_t n : ns) t.entries.emplace(n, KValue::infinity());
}

}  // namespace

ExpectedTable expected_small_rho_table(uint64_t rho) {
  ExpectedTable t;
  t.rho = rho;
  t.id = "k_" + std::to_string(rho) + " exceptional values";
  switch (rho) {
    case 1:
      put_inf(t, {1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23});
      put(t, {39, 55}, 6);
      put(t, {30, 35, 46, 51}, 5);
      break;
    case 2:
      put(t, {8, 24}, 8);
      put(t, {7, 15, 23, 31}, 7);
      put(t, {6, 14, 22, 30}, 6);
      put(t, {5, 13, 21, 29, 40, 56, 120, 184}, 5);
      break;
    case 3:
      put(t, {15}, 6);
      put(t, {11, 14, 23, 35, 47, 59, 71, 95}, 5);
      break;
    case 4:
      put(t, {24, 32, 56, 88, 96, 120, 160, 224, 480, 736}, 5);
      break;
    case 5:
      put(t, {79}, 5);
      break;
    default:
      throw std::invalid_argument("expected_small_rho_table: rho must be 1..5");
  }
  return t;
}

std::vector<uint64_t> expected_N(uint64_t rho) {
  RhoClass cls = classify_rho(ForbiddenValue(rho));
  std::vector<uint64_t> out;
  if (cls.kind == RhoClass::Kind::PowerOfTwo) {
    uint64_t rr = rho * rho;
    for (uint64_t c : {2, 6, 10, 14, 30, 46}) out.push_back(c * rr);
    for (uint64_t c : {6, 14, 22, 30}) out.push_back(c * (rr / 4));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (cls.kind == RhoClass::Kind::ThreeTimesPowerOfTwo) {
    uint64_t half = rho / 3;  // 2^(a+1)
    out.push_back(14 * half * half);
    return out;
  }
  throw std::invalid_argument(
      "expected_N: rho must be 2^(a+1) with a >= 2 or 3 * 2^(a+1)");
}

ExpectedTable expected_table_for(uint64_t rho) {
  if (rho >= 1 && rho <= 5) return expected_small_rho_table(rho);
  ExpectedTable t;
  t.rho = rho;
  t.id = "N(" + std::to_string(rho) + ") exceptional values";
  for (uint64_t n : expected_N(rho)) t.entries.emplace(n, KValue::finite(5));
  return t;
}

DiffReport verify_table(const ExpectedTable& table, uint64_t bound,
                        const SweepConfig& config) {
  if (bound < table.max_entry())
    throw std::invalid_argument("verify_table: bound below largest expected entry");
  DiffReport report;
  report.table_id = table.id;
  SweepReport swept = sweep(ForbiddenValue(table.rho), bound, config);
  for (uint64_t n = 1; n <= bound; ++n) {
    KValue computed = swept.k_of(n);
    auto it = table.entries.find(n);
    if (it != table.entries.end()) {
      if (!(computed == it->second))
        report.mismatches.push_back({n, it->second.to_string(), computed.to_string()});
    } else if (computed.is_infinite() || computed.value() > 4) {
      report.mismatches.push_back({n, "<= 4", computed.to_string()});
    }
  }
  report.pass = report.mismatches.empty();
  return report;
}

DiffReport verify_table(uint64_t rho, uint64_t bound, const SweepConfig& config) {
  return verify_table(expected_table_for(rho), bound, config);
}

}  // namespace fsq
