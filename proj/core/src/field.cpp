#include "cyclocode/field.hpp"

#include <algorithm>
#include <cstring>
#include <string>

namespace cyclo {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Schoolbook multiplication of coefficient vectors mod the monic polynomial
// x^D + sum c_i x^i (c given low degree first, length D), coefficients mod p.
void polymulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c,
                int64_t p, std::vector<int>& out, std::vector<int>& scratch) {
  int D = int(c.size());
  scratch.assign(2 * D, 0);
  for (int i = 0; i < D; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < D; ++j)
      if (b[j] != 0) scratch[i + j] = int((scratch[i + j] + int64_t(a[i]) * b[j]) % p);
  }
  for (int i = 2 * D - 2; i >= D; --i) {
    int t = scratch[i];
    if (t == 0) continue;
    scratch[i] = 0;
    for (int j = 0; j < D; ++j)
      if (c[j] != 0) scratch[i - D + j] = int(((scratch[i - D + j] - int64_t(t) * c[j]) % p + p) % p);
  }
  out.assign(scratch.begin(), scratch.begin() + D);
}

bool is_one(const std::vector<int>& a) {
  if (a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

// x^k mod f by binary powering.
std::vector<int> x_power(int64_t k, const std::vector<int>& c, int64_t p) {
  int D = int(c.size());
  std::vector<int> result(D, 0), base(D, 0), scratch;
  result[0] = 1;
  if (D == 1) {
    // x reduces to the constant -c_0 immediately.
    int64_t x0 = ((-c[0]) % p + p) % p;
    int64_t r = 1, b = x0;
    while (k > 0) {
      if (k & 1) r = r * b % p;
      b = b * b % p;
      k >>= 1;
    }
    result[0] = int(r);
    return result;
  }
  base[1] = 1;
  while (k > 0) {
    if (k & 1) polymulmod(result, base, c, p, result, scratch);
    polymulmod(base, base, c, p, base, scratch);
    k >>= 1;
  }
  return result;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> f;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

// True iff x generates the full unit group of F_p[x]/(f), i.e. x has order
// exactly Q-1.  That forces the ring to have Q-1 units, hence to be a field,
// so the test covers irreducibility and primitivity at once.
bool x_is_primitive(const std::vector<int>& c, int64_t p, int64_t N,
                    const std::vector<int64_t>& factors) {
  if (!is_one(x_power(N, c, p))) return false;
  for (int64_t f : factors)
    if (is_one(x_power(N / f, c, p))) return false;
  return true;
}

}  // namespace

uint16_t Subfield::add_slow(uint16_t a, uint16_t b) const {
  // Digits are base-p vectors of F_p coordinates; add componentwise.
  int64_t r = 0, mul = 1;
  for (int i = 0; i < e_; ++i) {
    int64_t da = a % p_, db = b % p_;
    a = uint16_t(a / p_);
    b = uint16_t(b / p_);
    r += (da + db) % p_ * mul;
    mul *= p_;
  }
  return uint16_t(r);
}

uint16_t Subfield::mul_slow(uint16_t a, uint16_t b) const {
  if (a == 0 || b == 0) return 0;
  return zeta_pow_digit_[(digit_log_[a] + digit_log_[b]) % (q_ - 1)];
}

Fe Subfield::to_field(uint16_t a) const { return Fe{digit_fe_[a]}; }

uint16_t Subfield::from_field(Fe x) const {
  if (x.is_zero()) return 0;
  if (x.v % zeta_exp_ != 0)
    fail(errc::mixed_contexts, "element is not in the subfield");
  return zeta_pow_digit_[x.v / zeta_exp_];
}

FieldCtx FieldCtx::build(int64_t p, int e, int m, const Budgets& budgets) {
  if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (e < 1 || m < 1) fail(errc::spec_invalid, "e and m must be positive");
  int D = e * m;
  int64_t Q = checked_pow(p, D, budgets.field_cap);
  if (Q < 0)
    fail(errc::field_too_large,
         "q^m = " + std::to_string(p) + "^" + std::to_string(D) + " exceeds the field cap " +
             std::to_string(budgets.field_cap));

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.m_ = m;
  ctx.D_ = D;
  ctx.q_ = checked_pow(p, e, Q);
  ctx.Q_ = Q;
  ctx.N_ = Q - 1;
  ctx.half_ = (p == 2) ? 0 : ctx.N_ / 2;

  // Scan packed coefficient values ascending for the first f with primitive x.
  // c_0 == 0 would make x a zero divisor, so those candidates are skipped.
  auto factors = prime_factors(ctx.N_ > 0 ? ctx.N_ : 1);
  std::vector<int> c(D, 0);
  bool found = false;
  for (int64_t packed = 1; packed < Q; ++packed) {
    if (packed % p == 0) continue;
    int64_t t = packed;
    for (int i = 0; i < D; ++i) {
      c[i] = int(t % p);
      t /= p;
    }
    if (ctx.N_ == 0 || x_is_primitive(c, p, ctx.N_, factors)) {
      found = true;
      break;
    }
  }
  if (!found) fail(errc::no_primitive_poly, "no primitive polynomial found (internal)");
  ctx.modulus_.assign(c.begin(), c.end());
  ctx.modulus_.push_back(1);

  ctx.build_tables();
  ctx.build_subfield();
  ctx.build_coords();
  return ctx;
}

int64_t FieldCtx::mulmod_exp(int64_t base_exp, int64_t k) const {
  int64_t km = k % N_;
  if (km < 0) km += N_;
  return base_exp * km % N_;  // both factors < 2^20, no overflow
}

Fe FieldCtx::from_packed(int64_t packed) const {
  if (packed < 0 || packed >= Q_) fail(errc::mixed_contexts, "packed value out of range");
  int32_t i = log_[packed];
  return Fe{i - 1};
}

Fe FieldCtx::uncoords(std::span<const uint16_t> c) const {
  if (int(c.size()) != m_) fail(errc::dimension_mismatch, "coordinate vector has wrong length");
  Fe acc = fe_zero;
  for (int i = 0; i < m_; ++i) acc = add(acc, mul(sub_.to_field(c[i]), theta_pow(i)));
  return acc;
}

void FieldCtx::build_tables() {
  const int64_t p = p_, Q = Q_, N = N_;
  const int D = D_;

  antilog_.assign(Q, 0);
  log_.assign(Q, 0);
  // Walk theta^k for k = 0..N-1, maintaining coefficients and packing them.
  std::vector<int> pw(D, 0);
  pw[0] = 1;
  for (int64_t k = 0; k < N; ++k) {
    int64_t packed = 0, mul = 1;
    for (int i = 0; i < D; ++i) {
      packed += pw[i] * mul;
      mul *= p;
    }
    antilog_[k + 1] = packed;
    log_[packed] = int32_t(k + 1);
    // Multiply by theta: shift up and reduce with x^D = -sum c_i x^i.
    int carry = pw[D - 1];
    for (int i = D - 1; i > 0; --i) pw[i] = pw[i - 1];
    pw[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < D; ++i) {
        int ci = modulus_[i];
        if (ci != 0) pw[i] = int(((pw[i] - int64_t(carry) * ci) % p + p) % p);
      }
    }
  }
  if (!is_one(pw)) fail(errc::consistency_failure, "generator order mismatch while building tables");

  zech_.assign(N, 0);
  for (int64_t k = 0; k < N; ++k) {
    int64_t packed = antilog_[k + 1];
    int64_t c0 = packed % p;
    int64_t bumped = packed - c0 + (c0 + 1) % p;
    zech_[k] = log_[bumped];
  }
  // 1 + 0 is handled by callers; zech_ covers 1 + theta^k only.
}

void FieldCtx::build_subfield() {
  Subfield& s = sub_;
  s.p_ = p_;
  s.e_ = e_;
  s.q_ = q_;
  s.ctx_ = this;
  s.zeta_exp_ = N_ / (q_ - 1);
  const int64_t q = q_;

  // digit -> ambient element: expand the digit base p and combine packed
  // representations of zeta^j, which is F_p-linear.
  s.digit_fe_.assign(q, -1);
  std::vector<int64_t> zeta_packed(e_);
  for (int j = 0; j < e_; ++j) {
    int64_t exp = s.zeta_exp_ * j % (N_ > 0 ? N_ : 1);
    zeta_packed[j] = antilog_[exp + 1];
  }
  for (int64_t d = 1; d < q; ++d) {
    std::vector<int> acc(D_, 0);
    int64_t t = d;
    for (int j = 0; j < e_; ++j) {
      int64_t a = t % p_;
      t /= p_;
      if (a == 0) continue;
      int64_t zp = zeta_packed[j];
      for (int i = 0; i < D_; ++i) {
        acc[i] = int((acc[i] + a * (zp % p_)) % p_);
        zp /= p_;
      }
    }
    int64_t packed = 0, mul = 1;
    for (int i = 0; i < D_; ++i) {
      packed += acc[i] * mul;
      mul *= p_;
    }
    s.digit_fe_[d] = log_[packed] - 1;
    if (s.digit_fe_[d] < 0) fail(errc::consistency_failure, "subfield digit mapped to zero");
  }

  s.digit_log_.assign(q, 0);
  s.zeta_pow_digit_.assign(q - 1, 0);
  for (int64_t d = 1; d < q; ++d) {
    int64_t v = s.digit_fe_[d];
    if (v % s.zeta_exp_ != 0) fail(errc::consistency_failure, "subfield image is not cyclic");
    int64_t k = v / s.zeta_exp_;
    s.digit_log_[d] = k;
    s.zeta_pow_digit_[k] = uint16_t(d);
  }

  s.neg_tab_.assign(q, 0);
  for (int64_t d = 0; d < q; ++d) {
    int64_t r = 0, mul = 1, t = d;
    for (int j = 0; j < e_; ++j) {
      int64_t a = t % p_;
      t /= p_;
      r += (p_ - a) % p_ * mul;
      mul *= p_;
    }
    s.neg_tab_[d] = uint16_t(r);
  }
  s.inv_tab_.assign(q, 0);
  for (int64_t d = 1; d < q; ++d) {
    int64_t k = s.digit_log_[d];
    s.inv_tab_[d] = s.zeta_pow_digit_[k == 0 ? 0 : q - 1 - k];
  }

  if (q <= 1024) {
    s.add_tab_.assign(size_t(q) * q, 0);
    s.mul_tab_.assign(size_t(q) * q, 0);
    for (int64_t a = 0; a < q; ++a)
      for (int64_t b = 0; b < q; ++b) {
        s.add_tab_[size_t(a) * q + b] = s.add_slow(uint16_t(a), uint16_t(b));
        s.mul_tab_[size_t(a) * q + b] = s.mul_slow(uint16_t(a), uint16_t(b));
      }
  }

  // Trace F_q -> F_p by summing Frobenius images inside the subfield.
  s.tr_p_tab_.assign(q, 0);
  for (int64_t d = 1; d < q; ++d) {
    int64_t k = s.digit_log_[d];
    uint16_t acc = 0;
    int64_t pe = 1;
    for (int j = 0; j < e_; ++j) {
      acc = s.add(acc, s.zeta_pow_digit_[k * pe % (q - 1)]);
      pe = pe * p_ % (q - 1);
    }
    if (acc >= p_) fail(errc::consistency_failure, "subfield trace left the prime field");
    s.tr_p_tab_[d] = uint8_t(acc);
  }

  // Traces from the big field: Tr_{Q/q} via q-power Frobenius orbits, and
  // Tr_{Q/p} independently via p-power orbits (their compatibility is a
  // checked identity in the tests, not assumed here).
  trQq_.assign(Q_, 0);
  trQp_.assign(Q_, 0);
  for (int64_t k = 0; k < N_; ++k) {
    Fe acc = Fe{int32_t(k)};
    int64_t ek = k;
    for (int i = 1; i < m_; ++i) {
      ek = ek * q_ % N_;
      acc = add(acc, Fe{int32_t(ek)});
    }
    trQq_[k + 1] = s.from_field(acc);

    Fe accp = Fe{int32_t(k)};
    int64_t pk = k;
    for (int i = 1; i < D_; ++i) {
      pk = pk * p_ % N_;
      accp = add(accp, Fe{int32_t(pk)});
    }
    if (!accp.is_zero()) {
      int64_t packed = antilog_[accp.v + 1];
      if (packed >= p_) fail(errc::consistency_failure, "absolute trace left the prime field");
      trQp_[k + 1] = uint8_t(packed);
    }
  }
}

void FieldCtx::build_coords() {
  const int D = D_;
  // Express theta^m over the theta-basis with F_q coefficients by solving one
  // F_p linear system over the product basis {theta^i zeta^j}.
  // Column index i*e+j holds packed coords of theta^i * zeta^j.
  std::vector<std::vector<int>> A(D, std::vector<int>(D + 1, 0));
  for (int col = 0; col < D; ++col) {
    int i = col / e_, j = col % e_;
    int64_t exp = (int64_t(i) + int64_t(j) * sub_.zeta_exp_) % N_;
    int64_t packed = antilog_[exp + 1];
    for (int row = 0; row < D; ++row) {
      A[row][col] = int(packed % p_);
      packed /= p_;
    }
  }
  {
    int64_t target = antilog_[(m_ % N_) + 1];  // packed form of theta^m
    for (int row = 0; row < D; ++row) {
      A[row][D] = int(target % p_);
      target /= p_;
    }
  }
  // Gauss-Jordan over F_p.
  for (int col = 0, row = 0; col < D && row < D; ++col) {
    int pr = -1;
    for (int r = row; r < D; ++r)
      if (A[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) fail(errc::consistency_failure, "product basis is singular");
    std::swap(A[pr], A[row]);
    int64_t inv = 1;
    for (int64_t t = 1; t < p_; ++t)
      if (t * A[row][col] % p_ == 1) {
        inv = t;
        break;
      }
    for (int cc = col; cc <= D; ++cc) A[row][cc] = int(A[row][cc] * inv % p_);
    for (int r = 0; r < D; ++r)
      if (r != row && A[r][col] != 0) {
        int64_t f = A[r][col];
        for (int cc = col; cc <= D; ++cc)
          A[r][cc] = int(((A[r][cc] - f * A[row][cc]) % p_ + p_) % p_);
      }
    ++row;
  }
  std::vector<uint16_t> gamma(m_, 0);
  for (int i = 0; i < m_; ++i) {
    int64_t digit = 0, mul = 1;
    for (int j = 0; j < e_; ++j) {
      digit += A[size_t(i) * e_ + j][D] * mul;
      mul *= p_;
    }
    gamma[i] = uint16_t(digit);
  }

  // Fill the coordinate table multiplicatively: coords(theta^(k+1)) is a
  // shift of coords(theta^k) plus the overflow coefficient times gamma.
  coords_.assign(size_t(Q_) * m_, 0);
  std::vector<uint16_t> cur(m_, 0);
  cur[0] = 1;
  const Subfield& s = sub_;
  for (int64_t k = 0; k < N_; ++k) {
    std::copy(cur.begin(), cur.end(), coords_.begin() + size_t(k + 1) * m_);
    uint16_t top = cur[m_ - 1];
    for (int i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < m_; ++i)
        if (gamma[i] != 0) cur[i] = s.add(cur[i], s.mul(top, gamma[i]));
  }
  std::vector<uint16_t> expect(m_, 0);
  expect[0] = 1;
  if (cur != expect) fail(errc::consistency_failure, "coordinate recursion did not close");
}

}  // namespace cyclo
