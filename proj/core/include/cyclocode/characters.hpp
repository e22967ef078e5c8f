#pragma once

#include <complex>
#include <vector>

#include "cyclocode/field.hpp"

namespace cyclo {

using cd = std::complex<double>;

struct CharSumCfg {
  double tolerance = 1e-9;  // relative snapping tolerance, see snap_int
};

// Additive and multiplicative characters of F_Q together with the classical
// sums built from them.  All sums are accumulated in ascending exponent order
// so results are bit-for-bit reproducible.
class CharTable {
 public:
  explicit CharTable(const FieldCtx& ctx, CharSumCfg cfg = {});

  const FieldCtx& ctx() const { return *ctx_; }
  double tolerance() const { return cfg_.tolerance; }

  // chi(x) = zeta_p^(Tr_{Q/p} x), the canonical additive character.
  cd additive_char(Fe x) const { return chi_[ctx_->idx(x)]; }

  // psi_j(theta^k) = omega^(jk) with omega = exp(2 pi i / (Q-1)).
  cd mult_char(int64_t j, Fe x) const;

  // G(psi_j) = sum over nonzero x of psi_j(x) chi(x).
  cd gauss_sum(int64_t j) const;

  // S(alpha) = sum over all x in F_Q of chi(alpha x^h).
  cd exponential_sum(Fe alpha, int h) const;
  std::vector<cd> exponential_sums_by_coset(int h) const;  // S(theta^i), i = 0..h-1

  // eta_i = sum of chi over the cyclotomic class theta^i <theta^h>.
  cd gaussian_period(int i, int h) const;
  std::vector<cd> gaussian_periods(int h) const;

  // Round a numerically-integer value, failing loudly if it is not one.
  // The tolerance is scaled by max(1, |v|) so large sums snap reliably.
  int64_t snap_int(cd v) const;

  // omega^(t mod N) lookup shared by the sum evaluators.
  cd unit_root(int64_t t) const {
    t %= ctx_->order();
    if (t < 0) t += ctx_->order();
    return root_N_[t];
  }

 private:
  const FieldCtx* ctx_;
  CharSumCfg cfg_;
  std::vector<cd> chi_;     // indexed like FieldCtx::idx
  std::vector<cd> root_N_;  // (Q-1)-th roots of unity
};

}  // namespace cyclo
