#pragma once

// Reference implementation of small extension fields, deliberately dumb: raw
// coefficient vectors, schoolbook reduction, trial-division irreducibility
// and stepwise order computation.  Nothing here shares code or tables with
// the library under test; slow is fine, wrong is not.

#include <cstdint>
#include <vector>

namespace oracle {

using Elt = std::vector<int>;  // coefficients low degree first, length D

class PolyField {
 public:
  // mod: c_0..c_D monic, degree D over F_p.
  PolyField(int64_t p, std::vector<int> mod) : p_(p), mod_(std::move(mod)) {
    D_ = int(mod_.size()) - 1;
    Q_ = 1;
    for (int i = 0; i < D_; ++i) Q_ *= p_;
  }

  int64_t p() const { return p_; }
  int degree() const { return D_; }
  int64_t size() const { return Q_; }

  Elt zero() const { return Elt(D_, 0); }
  Elt one() const {
    Elt r(D_, 0);
    r[0] = 1 % int(p_);
    return r;
  }
  Elt x() const {
    if (D_ == 1) return reduce_constant();
    Elt r(D_, 0);
    r[1] = 1;
    return r;
  }

  Elt add(const Elt& a, const Elt& b) const {
    Elt r(D_);
    for (int i = 0; i < D_; ++i) r[i] = int((a[i] + b[i]) % p_);
    return r;
  }
  Elt neg(const Elt& a) const {
    Elt r(D_);
    for (int i = 0; i < D_; ++i) r[i] = int(((p_ - a[i]) % p_));
    return r;
  }
  Elt scale(const Elt& a, int64_t s) const {
    Elt r(D_);
    s = ((s % p_) + p_) % p_;
    for (int i = 0; i < D_; ++i) r[i] = int(a[i] * s % p_);
    return r;
  }
  Elt mul(const Elt& a, const Elt& b) const {
    std::vector<int64_t> prod(2 * D_ - 1, 0);
    for (int i = 0; i < D_; ++i)
      for (int j = 0; j < D_; ++j) prod[i + j] = (prod[i + j] + int64_t(a[i]) * b[j]) % p_;
    // Reduce top-down with x^D = -(c_0 + ... + c_{D-1} x^{D-1}).
    for (int i = 2 * D_ - 2; i >= D_; --i) {
      int64_t t = prod[i];
      if (t == 0) continue;
      prod[i] = 0;
      for (int j = 0; j < D_; ++j)
        prod[i - D_ + j] = ((prod[i - D_ + j] - t * mod_[j]) % p_ + p_) % p_;
    }
    Elt r(D_);
    for (int i = 0; i < D_; ++i) r[i] = int(prod[i]);
    return r;
  }
  Elt pow(Elt a, int64_t k) const {
    Elt r = one();
    while (k > 0) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  bool is_zero(const Elt& a) const {
    for (int v : a)
      if (v != 0) return false;
    return true;
  }

  int64_t packed(const Elt& a) const {
    int64_t r = 0, m = 1;
    for (int i = 0; i < D_; ++i) {
      r += a[i] * m;
      m *= p_;
    }
    return r;
  }
  Elt unpack(int64_t v) const {
    Elt r(D_);
    for (int i = 0; i < D_; ++i) {
      r[i] = int(v % p_);
      v /= p_;
    }
    return r;
  }

  // Multiplicative order of x in the unit group, by stepping.
  int64_t order_of_x() const {
    Elt cur = x();
    for (int64_t k = 1; k <= Q_; ++k) {
      if (cur == one()) return k;
      cur = mul(cur, x());
      if (is_zero(cur)) return 0;  // x is a zero divisor
    }
    return 0;
  }

  // Absolute trace down to F_p; the result must be a constant.
  int64_t abs_trace(const Elt& a) const {
    Elt acc = zero();
    int64_t pe = 1;
    for (int i = 0; i < D_; ++i) {
      acc = add(acc, pow(a, pe));
      pe *= p_;
    }
    return acc[0];
  }

  // Trace onto the subfield of size p^e (e must divide D): sum of q-power
  // Frobenius images.
  Elt rel_trace(const Elt& a, int e) const {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p_;
    Elt acc = zero();
    Elt cur = a;
    for (int i = 0; i < D_ / e; ++i) {
      acc = add(acc, cur);
      cur = pow(cur, q);
    }
    return acc;
  }

 private:
  Elt reduce_constant() const {
    Elt r(1);
    r[0] = int(((-mod_[0]) % p_ + p_) % p_);
    return r;
  }

  int64_t p_, Q_;
  int D_;
  std::vector<int> mod_;
};

// Remainder of a modulo b over F_p (coefficient vectors, low degree first).
inline std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int64_t p) {
  int db = int(b.size()) - 1;
  while (db > 0 && b[db] == 0) --db;
  for (int i = int(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    // b is monic in every use below.
    int64_t f = a[i];
    for (int j = 0; j <= db; ++j) a[i - db + j] = int(((a[i - db + j] - f * b[j]) % p + p) % p);
  }
  a.resize(db > 0 ? db : 1);
  return a;
}

inline bool poly_is_zero(const std::vector<int>& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

// Trial-division irreducibility for monic f of degree D over F_p.
inline bool is_irreducible(const std::vector<int>& f, int64_t p) {
  int D = int(f.size()) - 1;
  if (D <= 1) return D == 1;
  for (int d = 1; 2 * d <= D; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t packed = 0; packed < count; ++packed) {
      std::vector<int> g(d + 1);
      int64_t t = packed;
      for (int i = 0; i < d; ++i) {
        g[i] = int(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

// First monic degree-D polynomial over F_p, in packed-coefficient order, that
// is irreducible with x a generator of the multiplicative group.  This is the
// slow two-test counterpart of the builder's combined order test.
inline std::vector<int> first_primitive(int64_t p, int D) {
  int64_t Q = 1;
  for (int i = 0; i < D; ++i) Q *= p;
  for (int64_t packed = 1; packed < Q; ++packed) {
    std::vector<int> f(D + 1);
    int64_t t = packed;
    for (int i = 0; i < D; ++i) {
      f[i] = int(t % p);
      t /= p;
    }
    f[D] = 1;
    if (f[0] == 0) continue;
    if (!is_irreducible(f, p)) continue;
    PolyField F(p, f);
    if (F.order_of_x() == Q - 1) return f;
  }
  return {};
}

}  // namespace oracle
