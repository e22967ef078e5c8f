#include "cyclocode/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cyclo {

CharTable::CharTable(const FieldCtx& ctx, CharSumCfg cfg) : ctx_(&ctx), cfg_(cfg) {
  const int64_t N = ctx.order(), p = ctx.p();
  std::vector<cd> root_p(p);
  for (int64_t t = 0; t < p; ++t)
    root_p[t] = std::polar(1.0, 2.0 * std::numbers::pi * double(t) / double(p));
  root_N_.resize(N);
  for (int64_t t = 0; t < N; ++t)
    root_N_[t] = std::polar(1.0, 2.0 * std::numbers::pi * double(t) / double(N));

  const auto& tr = ctx.trace_to_p_table();
  chi_.resize(tr.size());
  for (size_t i = 0; i < tr.size(); ++i) chi_[i] = root_p[tr[i]];
}

cd CharTable::mult_char(int64_t j, Fe x) const {
  if (x.is_zero()) fail(errc::zero_argument, "multiplicative character at zero");
  return unit_root(j % ctx_->order() * int64_t(x.v) % ctx_->order());
}

cd CharTable::gauss_sum(int64_t j) const {
  const int64_t N = ctx_->order();
  j %= N;
  if (j < 0) j += N;
  cd acc = 0.0;
  int64_t jk = 0;
  for (int64_t k = 0; k < N; ++k) {
    acc += root_N_[jk] * chi_[k + 1];
    jk += j;
    if (jk >= N) jk -= N;
  }
  return acc;
}

cd CharTable::exponential_sum(Fe alpha, int h) const {
  const int64_t N = ctx_->order();
  if (alpha.is_zero()) return cd(double(ctx_->Q()), 0.0);
  cd acc = 1.0;  // x = 0 contributes chi(0) = 1
  int64_t expo = alpha.v;
  for (int64_t k = 0; k < N; ++k) {
    acc += chi_[expo + 1];
    expo += h;
    if (expo >= N) expo -= N;
  }
  return acc;
}

std::vector<cd> CharTable::exponential_sums_by_coset(int h) const {
  std::vector<cd> s(h);
  for (int i = 0; i < h; ++i) s[i] = exponential_sum(ctx_->theta_pow(i), h);
  return s;
}

cd CharTable::gaussian_period(int i, int h) const {
  const int64_t N = ctx_->order();
  if (h <= 0 || N % h != 0) fail(errc::dimension_mismatch, "h must divide Q-1");
  cd acc = 0.0;
  int64_t expo = ((i % h) + h) % h;
  for (int64_t k = 0; k < N / h; ++k) {
    acc += chi_[expo + 1];
    expo += h;
  }
  return acc;
}

std::vector<cd> CharTable::gaussian_periods(int h) const {
  std::vector<cd> eta(h);
  for (int i = 0; i < h; ++i) eta[i] = gaussian_period(i, h);
  return eta;
}

int64_t CharTable::snap_int(cd v) const {
  double scale = std::max(1.0, std::abs(v));
  double r = std::round(v.real());
  if (std::abs(v.imag()) > cfg_.tolerance * scale ||
      std::abs(v.real() - r) > cfg_.tolerance * scale)
    fail(errc::non_integer_result,
         "character sum did not snap to an integer: " + std::to_string(v.real()) + " + " +
             std::to_string(v.imag()) + "i");
  return int64_t(r);
}

}  // namespace cyclo
