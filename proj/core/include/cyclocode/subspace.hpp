#pragma once

#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "cyclocode/common.hpp"
#include "cyclocode/errors.hpp"
#include "cyclocode/field.hpp"

namespace cyclo {

// r-dimensional subspace of F_q^m held in reduced row echelon form, which
// makes the representation canonical: equal subspaces compare equal.
struct Subspace {
  int m = 0, r = 0;
  std::vector<uint16_t> rows;   // r x m digits, row major
  std::vector<uint8_t> pivots;  // strictly increasing pivot columns
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

// Exact number of r-dimensional subspaces of F_q^m.
u128 gaussian_binomial(int m, int r, int64_t q);

// In-place reduced row echelon form over F_q; returns the rank.
int rref_inplace(std::vector<uint16_t>& rows, int nrows, int ncols, const Subfield& fq,
                 std::vector<uint8_t>* pivots = nullptr);

// Deterministic enumeration of every r-dimensional subspace of F_q^m:
// pivot-column combinations run lexicographically, and for a fixed
// combination the free entries run in odometer order over the row-major cell
// list with the last cell varying fastest.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int m, int r, int64_t q);

  u128 total() const { return total_; }
  u128 position() const { return position_; }
  void reset();
  void seek(u128 index);
  bool next(Subspace& out);

 private:
  struct Cell {
    int row, col;
  };
  void rebuild_cells();
  bool advance_comb();
  void emit(Subspace& out) const;

  int m_, r_;
  int64_t q_;
  u128 total_ = 0, position_ = 0;
  bool fresh_ = true, done_ = false;
  std::vector<uint8_t> comb_;
  std::vector<Cell> cells_;
  std::vector<uint16_t> odo_;
};

// The subspace a full enumeration would yield at the given position.
Subspace subspace_at(int m, int r, int64_t q, u128 index);

// Membership by reduction against the echelon basis.
bool contains(const Subspace& s, const Subfield& fq, std::span<const uint16_t> vec);

// How many of the given field elements lie in the subspace; reduction based,
// nothing is materialized.
int64_t intersect_count(const Subspace& s, const FieldCtx& ctx, std::span<const Fe> elems);

// All q^r subspace elements as field elements, zero first, in the
// deterministic span order (one basis row at a time, scalars ascending).
std::vector<Fe> materialize(const Subspace& s, const FieldCtx& ctx, const Budgets& budgets = {});

// Count of nonzero subspace elements in each cyclotomic class mod h.
std::vector<int64_t> coset_profile(const Subspace& s, const FieldCtx& ctx, int h,
                                   const Budgets& budgets = {});

// Orthogonal complement with respect to the pairing (x, y) -> Tr_{Q/q}(x y).
Subspace trace_dual(const Subspace& s, const FieldCtx& ctx);

struct SweepResult {
  int64_t best = 0;
  u128 best_index = 0;
  u128 visited = 0;
  bool any = false;
};

// Evaluate `eval` on every r-dimensional subspace and keep the maximum;
// ties resolve to the earliest enumeration position regardless of thread
// count.  `make_eval` is invoked once per worker and must yield a callable
// int64_t(const Subspace&).
template <class MakeEval>
SweepResult sweep_max(int m, int r, int64_t q, const Budgets& budgets, MakeEval&& make_eval) {
  const u128 total = gaussian_binomial(m, r, q);
  if (total > u128(budgets.subspace_budget))
    fail(errc::budget_exceeded, "subspace sweep of " + u128_str(total) +
                                    " subspaces exceeds the budget of " +
                                    std::to_string(budgets.subspace_budget));

  int threads = budgets.threads > 0 ? budgets.threads : 1;
  if (u128(threads) > total) threads = int(total);

  std::vector<SweepResult> partial(threads);
  auto run = [&](int worker) {
    u128 lo = total * u128(worker) / u128(threads);
    u128 hi = total * u128(worker + 1) / u128(threads);
    if (lo >= hi) return;
    auto eval = make_eval();
    SubspaceEnumerator en(m, r, q);
    en.seek(lo);
    Subspace s;
    SweepResult res;
    for (u128 i = lo; i < hi; ++i) {
      en.next(s);
      int64_t v = eval(s);
      ++res.visited;
      if (!res.any || v > res.best) {
        res.any = true;
        res.best = v;
        res.best_index = i;
      }
    }
    partial[worker] = res;
  };

  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  SweepResult out;
  for (const auto& res : partial) {
    out.visited += res.visited;
    if (!res.any) continue;
    if (!out.any || res.best > out.best ||
        (res.best == out.best && res.best_index < out.best_index)) {
      out.any = true;
      out.best = res.best;
      out.best_index = res.best_index;
    }
  }
  return out;
}

}  // namespace cyclo
