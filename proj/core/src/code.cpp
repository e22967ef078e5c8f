#include "cyclocode/code.hpp"

#include <set>

#include "cyclocode/subspace.hpp"

namespace cyclo {

LinearCode::LinearCode(const FieldCtx& ctx, std::vector<Fe> defining)
    : ctx_(&ctx), defining_(std::move(defining)) {
  for (Fe d : defining_) ctx.idx(d);  // context sanity check
  auto g = generator_matrix();
  rank_ = rref_inplace(g, ctx.m(), int(defining_.size()), ctx.subfield());
}

std::vector<uint16_t> LinearCode::generator_matrix() const {
  const int m = ctx_->m();
  const int64_t n = length();
  std::vector<uint16_t> g(size_t(m) * n);
  for (int i = 0; i < m; ++i) {
    auto row = codeword(ctx_->theta_pow(i));
    std::copy(row.begin(), row.end(), g.begin() + size_t(i) * n);
  }
  return g;
}

std::vector<uint16_t> LinearCode::codeword(Fe x) const {
  std::vector<uint16_t> w(defining_.size());
  for (size_t j = 0; j < defining_.size(); ++j)
    w[j] = ctx_->trace_to_q(ctx_->mul(x, defining_[j]));
  return w;
}

int64_t LinearCode::codeword_weight(Fe x) const {
  if (x.is_zero()) return 0;
  const auto& tr = ctx_->trace_to_q_table();
  const int64_t N = ctx_->order();
  int64_t w = 0;
  for (Fe d : defining_) {
    int64_t e = int64_t(x.v) + d.v;  // d is never zero for defining sets
    if (e >= N) e -= N;
    w += tr[e + 1] != 0;
  }
  return w;
}

WeightDistribution weight_distribution(const LinearCode& code, const Budgets& budgets) {
  const FieldCtx& ctx = code.ctx();
  if (ctx.Q() > budgets.enum_budget)
    fail(errc::budget_exceeded, "message enumeration exceeds the budget");
  WeightDistribution dist;
  dist.rank = code.rank();
  for (int64_t k = -1; k < ctx.order(); ++k) {
    ++dist.counts[code.codeword_weight(Fe{int32_t(k)})];
    ++dist.total;
  }
  return dist;
}

int64_t codeword_weight_via_sums(const CharTable& chars, const CodeSpec& spec,
                                 const std::vector<cd>& coset_sums, Fe x) {
  if (x.is_zero()) return 0;
  if (int(coset_sums.size()) != spec.h)
    fail(errc::dimension_mismatch, "need one exponential sum per class");
  const int64_t lx = chars.ctx().log(x);
  cd acc = 0.0;
  for (int t : spec.t) acc += coset_sums[size_t((lx + t) % spec.h)];
  cd w = (cd(double(spec.s * (spec.Q - 1) + spec.s), 0.0) - acc) /
         cd(double(spec.q * spec.h), 0.0);
  return chars.snap_int(w);
}

DualDistanceCheck dual_distance_at_least_3(const LinearCode& code) {
  const FieldCtx& ctx = code.ctx();
  const Subfield& fq = ctx.subfield();
  const int m = ctx.m();
  const int64_t n = code.length();
  auto g = code.generator_matrix();

  DualDistanceCheck res;
  res.no_zero_column = true;
  res.no_proportional_columns = true;
  std::set<std::vector<uint16_t>> seen;
  for (int64_t j = 0; j < n; ++j) {
    std::vector<uint16_t> col(m);
    for (int i = 0; i < m; ++i) col[size_t(i)] = g[size_t(i) * n + j];
    int first = -1;
    for (int i = 0; i < m; ++i)
      if (col[size_t(i)] != 0) {
        first = i;
        break;
      }
    if (first < 0) {
      res.no_zero_column = false;
      continue;
    }
    uint16_t inv = fq.inv(col[size_t(first)]);
    for (int i = 0; i < m; ++i) col[size_t(i)] = fq.mul(col[size_t(i)], inv);
    if (!seen.insert(col).second) res.no_proportional_columns = false;
  }
  return res;
}

}  // namespace cyclo
