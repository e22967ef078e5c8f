#include "cyclocode/ghw.hpp"

#include <chrono>
#include <cmath>
#include <span>
#include <utility>

namespace cyclo {

namespace {

// Objective of the direct method: the number of defining elements whose trace
// pairing with every basis element of the message subspace vanishes.  That is
// the count of coordinates on which the whole subcode is zero, so the subcode
// support size is n minus this value.
struct DirectEval {
  const FieldCtx& ctx;
  const std::vector<Fe>& dset;
  const uint16_t* trq;
  int64_t order;
  std::vector<Fe> basis;

  DirectEval(const FieldCtx& c, const std::vector<Fe>& d)
      : ctx(c), dset(d), trq(c.trace_to_q_table().data()), order(c.order()) {}

  int64_t operator()(const Subspace& h) {
    basis.resize(h.r);
    for (int i = 0; i < h.r; ++i)
      basis[i] =
          ctx.uncoords(std::span<const uint16_t>(h.rows.data() + size_t(i) * h.m, size_t(h.m)));
    int64_t count = 0;
    for (Fe d : dset) {
      bool annihilated = true;
      for (int i = 0; i < h.r && annihilated; ++i) {
        int64_t s = int64_t(basis[i].v) + d.v;
        if (s >= order) s -= order;
        annihilated = trq[s + 1] == 0;
      }
      count += annihilated;
    }
    return count;
  }
};

struct DualSweepEval {
  const FieldCtx& ctx;
  const std::vector<Fe>& elems;

  int64_t operator()(const Subspace& h) const { return intersect_count(h, ctx, elems); }
};

// Objective of the period route: sum over classes i of eta_i weighted by how
// many nonzero subspace elements fall in one of the shifted classes i - t_j.
// The value is an exact integer for every subspace; snapping enforces that.
struct PeriodEval {
  const FieldCtx& ctx;
  const CodeSpec& spec;
  const Budgets& budgets;
  const CharTable& chars;
  const std::vector<cd>& eta;

  int64_t operator()(const Subspace& h) const {
    std::vector<int64_t> prof = coset_profile(h, ctx, spec.h, budgets);
    cd acc = 0.0;
    for (int i = 0; i < spec.h; ++i) {
      int64_t cnt = 0;
      for (int tj : spec.t) cnt += prof[(i - tj + spec.h) % spec.h];
      if (cnt != 0) acc += double(cnt) * eta[i];
    }
    return chars.snap_int(acc);
  }
};

// Objective of the Gauss-sum route: the character-sum expansion of the same
// quantity, evaluated from the subspace's coset profile via a length-h DFT.
struct GaussEval {
  const FieldCtx& ctx;
  const CodeSpec& spec;
  const Budgets& budgets;
  const CharTable& chars;
  std::vector<cd> weight;  // G(psi_(lambda N/h)) * sum_j conj(omega_h^(lambda t_j))
  std::vector<cd> root;    // root[j] = exp(-2 pi i j / h)

  GaussEval(const FieldCtx& c, const CodeSpec& sp, const Budgets& b, const CharTable& ch,
            const std::vector<cd>& gauss_row)
      : ctx(c), spec(sp), budgets(b), chars(ch) {
    int h = spec.h;
    root.resize(h);
    for (int j = 0; j < h; ++j) {
      double ang = -2.0 * 3.141592653589793238462643383279502884 * j / h;
      root[j] = cd(std::cos(ang), std::sin(ang));
    }
    weight.assign(h, 0.0);
    for (int lam = 1; lam < h; ++lam) {
      cd t = 0.0;
      for (int tj : spec.t) t += root[size_t(int64_t(lam) * tj % h)];
      weight[lam] = gauss_row[lam] * t;
    }
  }

  int64_t operator()(const Subspace& h) const {
    std::vector<int64_t> prof = coset_profile(h, ctx, spec.h, budgets);
    cd acc = 0.0;
    for (int lam = 1; lam < spec.h; ++lam) {
      cd dft = 0.0;
      for (int c = 0; c < spec.h; ++c)
        if (prof[c] != 0) dft += double(prof[c]) * root[size_t(int64_t(lam) * c % spec.h)];
      acc += weight[lam] * dft;
    }
    return chars.snap_int(acc);
  }
};

int64_t int_pow(int64_t base, int exp) {
  int64_t v = checked_pow(base, exp, int64_t(1) << 62);
  if (v < 0) fail(errc::budget_exceeded, "power overflow in count assembly");
  return v;
}

GhwResult run_direct(const FieldCtx& ctx, const std::vector<Fe>& defining, int64_t n, int r,
                     const Budgets& budgets) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult sw = sweep_max(ctx.m(), r, ctx.q(), budgets,
                             [&] { return DirectEval(ctx, defining); });
  GhwResult res;
  res.r = r;
  res.method = GhwMethod::direct;
  res.n_r = sw.best;
  res.d_r = n - sw.best;
  res.witness_value = sw.best;
  res.witness = subspace_at(ctx.m(), r, ctx.q(), sw.best_index);
  res.visited = sw.visited;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (res.d_r <= 0 || res.d_r > n)
    fail(errc::consistency_failure,
         "support weight " + std::to_string(res.d_r) + " outside (0, n]");
  DirectEval check(ctx, defining);
  if (check(res.witness) != sw.best)
    fail(errc::consistency_failure, "witness re-evaluation disagrees with sweep optimum");
  return res;
}

}  // namespace

const char* to_string(GhwMethod m) {
  switch (m) {
    case GhwMethod::direct:
      return "direct";
    case GhwMethod::dual_sweep:
      return "thm1";
    case GhwMethod::gauss_sum:
      return "gauss";
    case GhwMethod::period_sum:
      return "period";
  }
  return "?";
}

GhwEngine::GhwEngine(const FieldCtx& ctx, const CodeSpec& spec, const Budgets& budgets)
    : ctx_(&ctx),
      spec_(spec),
      budgets_(budgets),
      dset_(build_defining_set(ctx, spec)),
      code_(ctx, dset_.elements) {
  if (code_.rank() != ctx.m())
    fail(errc::rank_deficient, "code rank " + std::to_string(code_.rank()) +
                                   " is below the message dimension " + std::to_string(ctx.m()));
}

const CharTable& GhwEngine::characters() const {
  if (!chars_) {
    CharSumCfg cfg;
    cfg.tolerance = budgets_.tolerance;
    chars_ = std::make_unique<CharTable>(*ctx_, cfg);
    periods_ = chars_->gaussian_periods(spec_.h);
    gauss_row_.assign(spec_.h, 0.0);
    int64_t step = ctx_->order() / spec_.h;
    for (int lam = 1; lam < spec_.h; ++lam) gauss_row_[lam] = chars_->gauss_sum(lam * step);
  }
  return *chars_;
}

GhwResult GhwEngine::compute(int r, GhwMethod method) const {
  if (r < 1 || r > ctx_->m())
    fail(errc::dimension_mismatch,
         "subcode dimension " + std::to_string(r) + " outside [1, " + std::to_string(ctx_->m()) + "]");
  if (method == GhwMethod::direct) {
    GhwResult res = run_direct(*ctx_, dset_.elements, spec_.n, r, budgets_);
    return res;
  }

  auto t0 = std::chrono::steady_clock::now();
  int sweep_dim = method == GhwMethod::dual_sweep ? ctx_->m() - r : r;
  SweepResult sw;
  switch (method) {
    case GhwMethod::dual_sweep:
      sw = sweep_max(ctx_->m(), sweep_dim, ctx_->q(), budgets_,
                     [&] { return DualSweepEval{*ctx_, dset_.elements}; });
      break;
    case GhwMethod::period_sum: {
      const CharTable& ch = characters();
      sw = sweep_max(ctx_->m(), sweep_dim, ctx_->q(), budgets_,
                     [&] { return PeriodEval{*ctx_, spec_, budgets_, ch, periods_}; });
      break;
    }
    case GhwMethod::gauss_sum: {
      const CharTable& ch = characters();
      sw = sweep_max(ctx_->m(), sweep_dim, ctx_->q(), budgets_,
                     [&] { return GaussEval(*ctx_, spec_, budgets_, ch, gauss_row_); });
      break;
    }
    default:
      fail(errc::dimension_mismatch, "unknown method");
  }

  GhwResult res;
  res.r = r;
  res.method = method;
  res.witness = subspace_at(ctx_->m(), sweep_dim, ctx_->q(), sw.best_index);
  res.witness_value = sw.best;
  res.visited = sw.visited;
  res.n_r = assemble_n_r(r, method, sw.best);
  res.d_r = spec_.n - res.n_r;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (res.d_r <= 0 || res.d_r > spec_.n)
    fail(errc::consistency_failure,
         "support weight " + std::to_string(res.d_r) + " outside (0, n]");
  if (evaluate_witness(res) != sw.best)
    fail(errc::consistency_failure, "witness re-evaluation disagrees with sweep optimum");
  return res;
}

int64_t GhwEngine::assemble_n_r(int r, GhwMethod method, int64_t best) const {
  switch (method) {
    case GhwMethod::direct:
    case GhwMethod::dual_sweep:
      return best;
    case GhwMethod::gauss_sum: {
      int64_t qr = int_pow(spec_.q, r);
      int64_t num = spec_.s * (spec_.Q - qr) + best;
      int64_t den = spec_.h * qr * (spec_.q - 1);
      if (num % den != 0)
        fail(errc::consistency_failure, "Gauss-sum count assembly is not integral");
      return num / den;
    }
    case GhwMethod::period_sum: {
      int64_t qr = int_pow(spec_.q, r);
      int64_t num = spec_.s * spec_.n0 * (spec_.q - 1) + best;
      int64_t den = qr * (spec_.q - 1);
      if (num % den != 0)
        fail(errc::consistency_failure, "period count assembly is not integral");
      return num / den;
    }
  }
  fail(errc::dimension_mismatch, "unknown method");
}

int64_t GhwEngine::evaluate_witness(const GhwResult& res) const {
  switch (res.method) {
    case GhwMethod::direct: {
      DirectEval eval(*ctx_, dset_.elements);
      return eval(res.witness);
    }
    case GhwMethod::dual_sweep:
      return intersect_count(res.witness, *ctx_, dset_.elements);
    case GhwMethod::period_sum: {
      const CharTable& ch = characters();
      PeriodEval eval{*ctx_, spec_, budgets_, ch, periods_};
      return eval(res.witness);
    }
    case GhwMethod::gauss_sum: {
      const CharTable& ch = characters();
      GaussEval eval(*ctx_, spec_, budgets_, ch, gauss_row_);
      return eval(res.witness);
    }
  }
  fail(errc::dimension_mismatch, "unknown method");
}

std::vector<GhwResult> GhwEngine::hierarchy(GhwMethod method) const {
  std::vector<GhwResult> out;
  out.reserve(ctx_->m());
  for (int r = 1; r <= ctx_->m(); ++r) {
    out.push_back(compute(r, method));
    if (r > 1 && out[r - 1].d_r <= out[r - 2].d_r)
      fail(errc::consistency_failure, "support weights are not strictly increasing at r = " +
                                          std::to_string(r));
  }
  return out;
}

GhwResult ghw_direct_code(const LinearCode& code, int r, const Budgets& budgets) {
  const FieldCtx& ctx = code.ctx();
  if (code.rank() != ctx.m())
    fail(errc::rank_deficient, "code rank " + std::to_string(code.rank()) +
                                   " is below the message dimension " + std::to_string(ctx.m()));
  if (r < 1 || r > ctx.m())
    fail(errc::dimension_mismatch,
         "subcode dimension " + std::to_string(r) + " outside [1, " + std::to_string(ctx.m()) + "]");
  return run_direct(ctx, code.defining(), code.length(), r, budgets);
}

}  // namespace cyclo
