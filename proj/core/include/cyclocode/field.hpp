#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclocode/common.hpp"
#include "cyclocode/errors.hpp"

namespace cyclo {

// Element of F_Q in exponent-or-zero form: v == -1 encodes 0, any other value
// encodes theta^v where theta is the canonical generator of the multiplicative
// group.  Elements are plain values and only meaningful together with the
// FieldCtx that produced them.
struct Fe {
  int32_t v = -1;
  bool is_zero() const { return v < 0; }
  friend bool operator==(const Fe&, const Fe&) = default;
};

inline constexpr Fe fe_zero{-1};

class FieldCtx;

// Arithmetic for the intermediate field F_q sitting inside F_Q.  Elements are
// "digits" in [0, q): the digit of sum a_j zeta^j (a_j in F_p, zeta the
// canonical generator of F_q inside F_Q) is sum a_j p^j.  In particular digit
// 0 is zero, digit 1 is one, and for e == 1 the digit of the prime-field
// element a is a itself.
class Subfield {
 public:
  int64_t p() const { return p_; }
  int e() const { return e_; }
  int64_t q() const { return q_; }
  int64_t zeta_exponent() const { return zeta_exp_; }

  uint16_t add(uint16_t a, uint16_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_tab_.empty()) return add_tab_[size_t(a) * q_ + b];
    return add_slow(a, b);
  }
  uint16_t neg(uint16_t a) const { return neg_tab_[a]; }
  uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
  uint16_t mul(uint16_t a, uint16_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[size_t(a) * q_ + b];
    return mul_slow(a, b);
  }
  uint16_t inv(uint16_t a) const {
    if (a == 0) fail(errc::zero_argument, "inverse of zero in F_q");
    return inv_tab_[a];
  }
  int trace_to_p(uint16_t a) const { return tr_p_tab_[a]; }

  // Discrete log with respect to zeta; digit must be nonzero.
  int64_t log(uint16_t a) const {
    if (a == 0) fail(errc::zero_argument, "log of zero in F_q");
    return digit_log_[a];
  }
  uint16_t from_log(int64_t k) const { return zeta_pow_digit_[k % (q_ - 1)]; }

  // Embedding into the ambient field and its partial inverse.  from_field
  // requires an element of the subfield image and reports mixed_contexts
  // otherwise.
  Fe to_field(uint16_t a) const;
  uint16_t from_field(Fe x) const;

 private:
  friend class FieldCtx;
  uint16_t add_slow(uint16_t a, uint16_t b) const;
  uint16_t mul_slow(uint16_t a, uint16_t b) const;

  int64_t p_ = 0, q_ = 0;
  int e_ = 0;
  int64_t zeta_exp_ = 0;
  std::vector<uint16_t> add_tab_;   // q*q, built when q <= 1024
  std::vector<uint16_t> mul_tab_;   // q*q, built when q <= 1024
  std::vector<uint16_t> neg_tab_;   // q
  std::vector<uint16_t> inv_tab_;   // q, [0] unused
  std::vector<uint8_t> tr_p_tab_;   // q
  std::vector<int64_t> digit_log_;  // q, [0] unused
  std::vector<uint16_t> zeta_pow_digit_;  // q-1
  std::vector<int32_t> digit_fe_;         // q, exponent-or-zero form
  const FieldCtx* ctx_ = nullptr;
};

// Tower F_p <= F_q = F_p^e <= F_Q = F_q^m with full log/antilog, Zech-log,
// trace and coordinate tables.  The modulus is the first monic primitive
// polynomial of degree e*m over F_p in packed-coefficient order (candidates
// f = x^D + sum c_i x^i ordered by sum c_i p^i ascending), which pins every
// derived table deterministically.
class FieldCtx {
 public:
  static FieldCtx build(int64_t p, int e, int m, const Budgets& budgets = {});

  int64_t p() const { return p_; }
  int e() const { return e_; }
  int m() const { return m_; }
  int64_t q() const { return q_; }
  int64_t Q() const { return Q_; }
  int64_t order() const { return N_; }  // multiplicative group order Q - 1
  int degree() const { return D_; }     // e * m, degree of the modulus

  // Modulus coefficients c_0 .. c_D, low degree first, c_D == 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Fe zero() const { return fe_zero; }
  Fe one() const { return Fe{0}; }
  Fe theta() const { return Fe{N_ > 1 ? 1 : 0}; }
  Fe theta_pow(int64_t k) const {
    k %= N_;
    if (k < 0) k += N_;
    return Fe{int32_t(k)};
  }

  Fe add(Fe a, Fe b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int32_t d = b.v - a.v;
    if (d < 0) d += N_;
    int32_t z = zech_[d];
    if (z == 0) return fe_zero;
    int64_t s = int64_t(a.v) + (z - 1);
    if (s >= N_) s -= N_;
    return Fe{int32_t(s)};
  }
  Fe neg(Fe a) const {
    if (a.is_zero() || p_ == 2) return a;
    int64_t s = a.v + half_;
    if (s >= N_) s -= N_;
    return Fe{int32_t(s)};
  }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const {
    if (a.is_zero() || b.is_zero()) return fe_zero;
    int64_t s = int64_t(a.v) + b.v;
    if (s >= N_) s -= N_;
    return Fe{int32_t(s)};
  }
  Fe inv(Fe a) const {
    if (a.is_zero()) fail(errc::zero_argument, "inverse of zero");
    return a.v == 0 ? a : Fe{int32_t(N_ - a.v)};
  }
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, int64_t k) const {
    if (a.is_zero()) {
      if (k < 0) fail(errc::zero_argument, "inverse of zero");
      return k == 0 ? one() : fe_zero;
    }
    return theta_pow(mulmod_exp(a.v, k));
  }
  int64_t log(Fe a) const {
    if (a.is_zero()) fail(errc::zero_argument, "log of zero");
    return a.v;
  }

  // Packed representation: sum of F_p coordinates over the polynomial basis
  // {1, theta, ..., theta^(D-1)}, packed as sum c_i p^i, so 0 <= packed < Q.
  int64_t packed(Fe a) const { return antilog_[idx(a)]; }
  Fe from_packed(int64_t packed) const;

  uint16_t trace_to_q(Fe a) const { return trQq_[idx(a)]; }
  int trace_to_p(Fe a) const { return trQp_[idx(a)]; }
  const std::vector<uint16_t>& trace_to_q_table() const { return trQq_; }
  const std::vector<uint8_t>& trace_to_p_table() const { return trQp_; }

  const Subfield& subfield() const { return sub_; }

  // F_q coordinates over the basis {1, theta, ..., theta^(m-1)}.
  void coords(Fe a, uint16_t* out) const {
    const uint16_t* row = &coords_[size_t(idx(a)) * m_];
    for (int i = 0; i < m_; ++i) out[i] = row[i];
  }
  std::vector<uint16_t> coords(Fe a) const {
    std::vector<uint16_t> c(m_);
    coords(a, c.data());
    return c;
  }
  Fe uncoords(std::span<const uint16_t> c) const;

  // Table index of an element: 0 for zero, v + 1 for theta^v.  Public so that
  // sweep-style callers can address their own per-element arrays.
  int32_t idx(Fe a) const {
    int32_t i = a.v + 1;
    if (i < 0 || i > N_) fail(errc::mixed_contexts, "element does not belong to this field");
    return i;
  }

 private:
  FieldCtx() = default;
  int64_t mulmod_exp(int64_t base_exp, int64_t k) const;
  void build_tables();
  void build_subfield();
  void build_coords();

  int64_t p_ = 0, q_ = 0, Q_ = 0, N_ = 0;
  int e_ = 0, m_ = 0, D_ = 0;
  int64_t half_ = 0;  // (Q-1)/2 for odd p: exponent of -1
  std::vector<int> modulus_;
  std::vector<int64_t> antilog_;   // idx -> packed
  std::vector<int32_t> log_;       // packed -> idx
  std::vector<int32_t> zech_;      // k -> idx(1 + theta^k)
  std::vector<uint16_t> trQq_;     // idx -> digit of Tr_{Q/q}
  std::vector<uint8_t> trQp_;      // idx -> Tr_{Q/p} in [0, p)
  std::vector<uint16_t> coords_;   // idx * m .. +m: digits over theta-basis
  Subfield sub_;
};

}  // namespace cyclo
