#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclocode/cyclotomy.hpp"

namespace cyclo {

// Witness (l, k) for the two-valued exponential-sum case: m = 2 l k and
// h | q^k + 1.  The canonical witness is the one with the smallest l (k is
// then determined).  All witnesses must predict the same value map; a
// disagreement is reported as an internal consistency failure.
struct SemiPrimitiveParams {
  int l = 0;
  int k = 0;
  int h0 = 0;                   // the exceptional class index
  int64_t sqrt_q_m = 0;         // q^(m/2)
  int64_t sum_exceptional = 0;  // S(alpha) for alpha in class h0
  int64_t sum_generic = 0;      // S(alpha) for every other class
};

std::optional<SemiPrimitiveParams> semiprimitive_params(const CodeSpec& spec);

// S(alpha) in the two-valued case, selected by the class index of alpha.
int64_t closed_form_exp_sum(const SemiPrimitiveParams& sp, int coset);

struct PredictedWeight {
  int64_t w = 0;
  int64_t count = 0;
  friend bool operator==(const PredictedWeight&, const PredictedWeight&) = default;
};

// Predicted nonzero-weight table in the two-valued case: at most two rows in
// ascending weight order, multiplicities summing to Q - 1.  Rows with zero
// multiplicity are dropped; at s = h the single surviving row makes the code
// one-weight.
struct WeightPrediction {
  int64_t n = 0;
  int dim = 0;
  std::vector<PredictedWeight> rows;
};

std::optional<WeightPrediction> predict_weights(const CodeSpec& spec);

enum class FormulaStatus { value, not_applicable, not_covered };

struct FormulaValue {
  FormulaStatus status = FormulaStatus::not_applicable;
  int64_t value = 0;
  friend bool operator==(const FormulaValue&, const FormulaValue&) = default;
};

const char* to_string(FormulaStatus s);

// Support-weight closed form requiring an odd-l witness; covers every
// r in [1, m], with the two branches meeting consistently at r = m/2.
FormulaValue odd_witness_ghw(const CodeSpec& spec, int r);

// Support-weight closed form requiring an even-l witness and s < h; covers
// r <= l'k and r >= m - l'k where l' is the odd part of l, and reports the
// gap in between as not_covered.  Among even-l witnesses the one with the
// largest l'k is used, which maximizes coverage.
FormulaValue even_witness_ghw(const CodeSpec& spec, int r);

// Closed forms that need no two-valued hypothesis: s = h gives the full
// hierarchy, and r = m - 1 gives n - 1 for every spec.
std::optional<int64_t> special_case_ghw(const CodeSpec& spec, int r);

struct BoundSet {
  int64_t singleton_lo = 0;
  int64_t singleton_hi = 0;
  int64_t griesmer_lo = 0;
  int64_t plotkin_hi = 0;
};

// Classical support-weight bounds for an [n, m] code over F_q given the
// minimum distance d1: r <= d_r <= n - m + r, the Griesmer sum as a lower
// bound, and the averaging (Plotkin-style) upper bound.
BoundSet ghw_bounds(int64_t n, int m, int64_t q, int r, int64_t d1);

}  // namespace cyclo
