#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclocode/closedform.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/subspace.hpp"

namespace cyclo {

// The built-in verification grid: every valid spec with q in {2, 3},
// m in {2, 4, 6}, every admissible h, and every class subset of size <= 3,
// ordered by field, then h, then subset size, then lexicographic subset.
std::vector<RawSpec> default_grid();

// One spec per line: "p e m h t1,t2,...".  '#' starts a comment, blank lines
// are skipped.  Parse errors report the line number; validity of the parsed
// specs is a separate concern handled by the runner.
std::vector<RawSpec> parse_grid_text(const std::string& text);
std::vector<RawSpec> parse_grid_file(const std::string& path);

// Per-method outcome of one rank: the assembled support weight, the raw sweep
// objective, the argmax subspace position, and whether re-evaluating that
// witness through the plain single-subspace code path reproduced the optimum.
struct MethodValue {
  int64_t d = 0;
  int64_t raw = 0;
  u128 witness_index = 0;
  bool witness_ok = false;
};

struct RankReport {
  int r = 0;
  MethodValue direct, dual, gauss, period;
  bool methods_agree = false;
  int64_t d_r = 0;  // the direct method's value, the reference for the flags
  int64_t n_r = 0;
  FormulaValue odd_form, even_form;
  std::optional<int64_t> special_form;
  bool closed_forms_ok = false;
  BoundSet bounds;
  bool bounds_ok = false;
  Subspace witness;  // dual-sweep witness, dimension m - r
  bool ok = false;
};

struct WeightReport {
  std::vector<std::pair<int64_t, int64_t>> counts;  // weight -> messages, ascending
  bool total_ok = false;
  bool power_moment_ok = false;
  bool via_sums_ok = false;
  bool sample_direct_ok = false;
  int distinct_nonzero = 0;
  std::optional<WeightPrediction> prediction;
  bool prediction_match = false;
  bool ok = false;
};

struct VerificationRecord {
  RawSpec raw;
  bool valid = false;
  std::vector<SpecViolation> violations;
  std::optional<CodeSpec> spec;
  int rank = 0;
  bool rank_ok = false;
  bool dual_distance_ok = false;
  WeightReport weights;
  std::optional<SemiPrimitiveParams> semiprimitive;
  std::vector<double> eta;
  bool period_identity_ok = false;
  bool exp_sum_closed_form_ok = true;  // vacuously true without a two-valued witness
  std::vector<RankReport> per_r;
  bool monotone_ok = false;
  bool duality_checked = false;  // exhaustive annihilator/dual identity, m <= 4
  bool duality_ok = true;
  bool two_weight_match = false;  // two-weight observed iff two-valued with s < h
  bool ok = false;
  double seconds = 0.0;
  std::string error;  // populated when evaluation aborted on an exception
};

struct GridSummary {
  int64_t total = 0;
  int64_t passed = 0;
  int64_t mismatched = 0;
  int64_t invalid = 0;
};

// Runs the full cross-check battery over a list of specs.  Specs sharing a
// field tower share tables; specs sharing (tower, h) additionally share the
// per-subspace census that all four support-weight methods read from, so the
// built-in grid completes in minutes.  Output order matches input order.
class GridRunner {
 public:
  explicit GridRunner(const Budgets& budgets = {});
  std::vector<VerificationRecord> run(const std::vector<RawSpec>& grid,
                                      GridSummary* summary = nullptr) const;

 private:
  Budgets budgets_;
};

}  // namespace cyclo
