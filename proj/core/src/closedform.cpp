#include "cyclocode/closedform.hpp"

#include <algorithm>
#include <cstdint>

#include "cyclocode/errors.hpp"

namespace cyclo {

namespace {

int64_t int_pow(int64_t base, int exp) {
  int64_t v = checked_pow(base, exp, int64_t(1) << 62);
  if (v < 0) fail(errc::budget_exceeded, "power overflow in closed-form evaluation");
  return v;
}

using i128 = __int128;

int64_t exact_div(i128 num, i128 den, const char* what) {
  if (den == 0 || num % den != 0)
    fail(errc::consistency_failure, std::string(what) + " did not divide exactly");
  i128 v = num / den;
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    fail(errc::budget_exceeded, std::string(what) + " does not fit in 64 bits");
  return int64_t(v);
}

struct Witness {
  int l, k;
};

// All factorizations m = 2 l k with h | q^k + 1, in ascending l order.
std::vector<Witness> all_witnesses(const CodeSpec& spec) {
  std::vector<Witness> out;
  if (spec.m % 2 != 0) return out;
  int half = spec.m / 2;
  for (int l = 1; l <= half; ++l) {
    if (half % l != 0) continue;
    int k = half / l;
    if ((int_pow(spec.q, k) + 1) % spec.h == 0) out.push_back({l, k});
  }
  return out;
}

SemiPrimitiveParams params_for(const CodeSpec& spec, Witness w) {
  SemiPrimitiveParams sp;
  sp.l = w.l;
  sp.k = w.k;
  int64_t quot = (int_pow(spec.q, w.k) + 1) / spec.h;
  sp.h0 = (spec.p > 2 && w.l % 2 == 1 && quot % 2 == 1) ? spec.h / 2 : 0;
  sp.sqrt_q_m = int_pow(spec.q, spec.m / 2);
  int sign = w.l % 2 == 1 ? 1 : -1;  // (-1)^(l-1)
  sp.sum_exceptional = sign * (spec.h - 1) * sp.sqrt_q_m;
  sp.sum_generic = -sign * sp.sqrt_q_m;
  return sp;
}

std::vector<int64_t> value_map(const CodeSpec& spec, const SemiPrimitiveParams& sp) {
  std::vector<int64_t> vals(spec.h, sp.sum_generic);
  vals[sp.h0] = sp.sum_exceptional;
  return vals;
}

// Upper branch shared by the two support-weight corollaries:
// d_r = (s (q^m - 1) - h (q^(m-r) - 1)) / (h (q - 1)).
int64_t upper_branch(const CodeSpec& spec, int r) {
  i128 num = i128(spec.s) * (int_pow(spec.q, spec.m) - 1) -
             i128(spec.h) * (int_pow(spec.q, spec.m - r) - 1);
  return exact_div(num, i128(spec.h) * (spec.q - 1), "upper-branch support weight");
}

}  // namespace

const char* to_string(FormulaStatus s) {
  switch (s) {
    case FormulaStatus::value:
      return "value";
    case FormulaStatus::not_applicable:
      return "not_applicable";
    case FormulaStatus::not_covered:
      return "not_covered";
  }
  return "?";
}

std::optional<SemiPrimitiveParams> semiprimitive_params(const CodeSpec& spec) {
  std::vector<Witness> ws = all_witnesses(spec);
  if (ws.empty()) return std::nullopt;
  SemiPrimitiveParams canonical = params_for(spec, ws.front());
  std::vector<int64_t> map = value_map(spec, canonical);
  for (size_t i = 1; i < ws.size(); ++i) {
    if (value_map(spec, params_for(spec, ws[i])) != map)
      fail(errc::consistency_failure, "two-valued witnesses predict different sum maps");
  }
  return canonical;
}

int64_t closed_form_exp_sum(const SemiPrimitiveParams& sp, int coset) {
  return coset == sp.h0 ? sp.sum_exceptional : sp.sum_generic;
}

std::optional<WeightPrediction> predict_weights(const CodeSpec& spec) {
  std::optional<SemiPrimitiveParams> sp = semiprimitive_params(spec);
  if (!sp) return std::nullopt;
  i128 sign = sp->l % 2 == 1 ? -1 : 1;  // (-1)^l
  i128 base = i128(spec.s) * (spec.Q - 1) + spec.s;
  WeightPrediction pred;
  pred.n = spec.n;
  pred.dim = spec.m;
  int64_t w1 = exact_div(base + sign * (spec.h - spec.s) * sp->sqrt_q_m,
                         i128(spec.q) * spec.h, "first predicted weight");
  int64_t c1 = exact_div(i128(spec.s) * (spec.Q - 1), spec.h, "first predicted multiplicity");
  int64_t w2 = exact_div(base - sign * spec.s * sp->sqrt_q_m, i128(spec.q) * spec.h,
                         "second predicted weight");
  int64_t c2 = exact_div(i128(spec.h - spec.s) * (spec.Q - 1), spec.h,
                         "second predicted multiplicity");
  if (c1 > 0) pred.rows.push_back({w1, c1});
  if (c2 > 0) pred.rows.push_back({w2, c2});
  std::sort(pred.rows.begin(), pred.rows.end(),
            [](const PredictedWeight& a, const PredictedWeight& b) { return a.w < b.w; });
  int64_t total = 0;
  for (const auto& row : pred.rows) total += row.count;
  if (total != spec.Q - 1)
    fail(errc::consistency_failure, "predicted multiplicities do not sum to Q - 1");
  return pred;
}

FormulaValue odd_witness_ghw(const CodeSpec& spec, int r) {
  std::vector<Witness> ws = all_witnesses(spec);
  bool odd = std::any_of(ws.begin(), ws.end(), [](Witness w) { return w.l % 2 == 1; });
  if (!odd) return {};
  int half = spec.m / 2;
  auto lower = [&] {
    i128 qr = int_pow(spec.q, r);
    i128 num = i128(spec.s) * (int_pow(spec.q, spec.m) - int_pow(spec.q, spec.m - r)) +
               i128(spec.s - spec.h) * int_pow(spec.q, half - r) * (qr - 1);
    return exact_div(num, i128(spec.h) * (spec.q - 1), "lower-branch support weight");
  };
  if (r < half) return {FormulaStatus::value, lower()};
  if (r == half) {
    int64_t lo = lower(), hi = upper_branch(spec, r);
    if (lo != hi)
      fail(errc::consistency_failure, "branch overlap disagrees at r = m/2");
    return {FormulaStatus::value, lo};
  }
  return {FormulaStatus::value, upper_branch(spec, r)};
}

FormulaValue even_witness_ghw(const CodeSpec& spec, int r) {
  if (spec.s >= spec.h) return {};
  std::vector<Witness> ws = all_witnesses(spec);
  int cover = 0;
  for (Witness w : ws) {
    if (w.l % 2 != 0) continue;
    int lp = w.l;
    while (lp % 2 == 0) lp /= 2;
    cover = std::max(cover, lp * w.k);
  }
  if (cover == 0) return {};
  if (r <= cover) {
    i128 half_pow = int_pow(spec.q, spec.m / 2);
    i128 num = i128(spec.s) * int_pow(spec.q, spec.m / 2 - r) * (int_pow(spec.q, r) - 1) *
               (half_pow - 1);
    return {FormulaStatus::value,
            exact_div(num, i128(spec.h) * (spec.q - 1), "even-witness support weight")};
  }
  if (r >= spec.m - cover) return {FormulaStatus::value, upper_branch(spec, r)};
  return {FormulaStatus::not_covered, 0};
}

std::optional<int64_t> special_case_ghw(const CodeSpec& spec, int r) {
  if (spec.s == spec.h) {
    i128 num = i128(int_pow(spec.q, spec.m)) - int_pow(spec.q, spec.m - r);
    return exact_div(num, spec.q - 1, "full-selection support weight");
  }
  if (r == spec.m - 1) return spec.n - 1;
  return std::nullopt;
}

BoundSet ghw_bounds(int64_t n, int m, int64_t q, int r, int64_t d1) {
  if (r < 1 || r > m) fail(errc::dimension_mismatch, "bound rank outside [1, m]");
  BoundSet b;
  b.singleton_lo = r;
  b.singleton_hi = n - m + r;
  b.griesmer_lo = 0;
  int64_t qi = 1;
  for (int i = 0; i < r; ++i) {
    b.griesmer_lo += (d1 + qi - 1) / qi;
    qi *= q;
  }
  i128 qm = int_pow(q, m);
  i128 plotkin = i128(n) * (int_pow(q, r) - 1) * int_pow(q, m - r) / (qm - 1);
  if (plotkin > i128(INT64_MAX)) fail(errc::budget_exceeded, "averaging bound does not fit in 64 bits");
  b.plotkin_hi = int64_t(plotkin);
  return b;
}

}  // namespace cyclo
