#pragma once

#include <cstdint>
#include <string>

namespace cyclo {

using u128 = unsigned __int128;

// Resource limits shared by the enumeration-heavy routines.  The defaults are
// sized so that every exhaustive computation stays interactive on one core;
// exceeding a budget raises errc::budget_exceeded before work starts whenever
// the cost is predictable.
struct Budgets {
  int64_t field_cap = int64_t{1} << 20;       // largest Q = q^m we build tables for
  int64_t subspace_budget = 100'000'000;      // max subspaces visited in one sweep
  int64_t enum_budget = int64_t{1} << 22;     // max field elements enumerated per pass
  double tolerance = 1e-9;                    // float-to-integer snapping for character sums
  int threads = 1;
};

std::string u128_str(u128 v);

// Overflow-checked helpers for small powers; both fail loudly rather than wrap.
int64_t checked_pow(int64_t base, int exp, int64_t limit);

}  // namespace cyclo
