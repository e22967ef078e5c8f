#include "cyclocode/cyclotomy.hpp"

#include <algorithm>

namespace cyclo {

namespace {

bool prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

u128 u128_modpow(u128 base, int64_t exp, u128 mod) {
  u128 r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// p^e, saturating at cap (returns cap + 1 when exceeded).
u128 u128_pow_sat(int64_t p, int64_t e, u128 cap) {
  u128 r = 1;
  for (int64_t i = 0; i < e; ++i) {
    if (r > cap / u128(p)) return cap + 1;
    r *= u128(p);
  }
  return r;
}

}  // namespace

const char* to_string(SpecViolation v) {
  switch (v) {
    case SpecViolation::not_prime: return "NotPrime";
    case SpecViolation::bad_tower: return "BadTower";
    case SpecViolation::non_divisor: return "NonDivisor";
    case SpecViolation::h_out_of_range: return "HOutOfRange";
    case SpecViolation::t_empty: return "EmptyT";
    case SpecViolation::t_out_of_range: return "TOutOfRange";
    case SpecViolation::t_not_increasing: return "TNotSorted";
  }
  return "?";
}

std::vector<SpecViolation> validate_spec(const RawSpec& raw) {
  std::vector<SpecViolation> out;
  bool tower_ok = true;
  if (!prime(raw.p)) {
    out.push_back(SpecViolation::not_prime);
    tower_ok = false;
  }
  if (raw.e < 1 || raw.m < 1) {
    out.push_back(SpecViolation::bad_tower);
    tower_ok = false;
  }

  if (tower_ok) {
    const u128 kCap = u128(1) << 100;
    u128 q = u128_pow_sat(raw.p, raw.e, kCap);
    if (raw.h < 1) {
      out.push_back(SpecViolation::h_out_of_range);
    } else if (q > kCap) {
      // q alone is astronomically large; divisibility cannot hold unless
      // h = 1, which the range check below rejects anyway.
      out.push_back(SpecViolation::non_divisor);
      out.push_back(SpecViolation::h_out_of_range);
    } else {
      // h (q - 1) | Q - 1  <=>  p^(e m) == 1 mod h (q - 1).
      u128 mod = u128(raw.h) * (q - 1);
      int64_t em = int64_t(raw.e) * raw.m;
      bool divides = mod == 0 || u128_modpow(u128(raw.p), em, mod) == 1 % mod;
      if (!divides) out.push_back(SpecViolation::non_divisor);
      // 1 < h < sqrt(Q) + 1, as integers: (h - 1)^2 < Q.
      u128 Q = u128_pow_sat(raw.p, em, kCap);
      u128 hm1 = u128(raw.h - 1);
      bool in_range = raw.h > 1 && (Q > kCap || hm1 * hm1 < Q);
      if (!in_range) out.push_back(SpecViolation::h_out_of_range);
    }
  }

  if (raw.t.empty()) out.push_back(SpecViolation::t_empty);
  bool range_ok = true, order_ok = true;
  for (size_t j = 0; j < raw.t.size(); ++j) {
    if (raw.t[j] < 0 || (raw.h >= 1 && raw.t[j] >= raw.h)) range_ok = false;
    if (j > 0 && raw.t[j] <= raw.t[j - 1]) order_ok = false;
  }
  if (!range_ok) out.push_back(SpecViolation::t_out_of_range);
  if (!order_ok) out.push_back(SpecViolation::t_not_increasing);
  return out;
}

CodeSpec make_spec(const RawSpec& raw) {
  auto violations = validate_spec(raw);
  if (!violations.empty()) {
    std::string msg = "invalid spec:";
    for (auto v : violations) {
      msg += ' ';
      msg += to_string(v);
    }
    fail(errc::spec_invalid, msg);
  }
  const int64_t kMax = int64_t{1} << 62;
  int64_t q = checked_pow(raw.p, raw.e, kMax);
  int64_t Q = q < 0 ? -1 : checked_pow(q, raw.m, kMax);
  if (Q < 0) fail(errc::field_too_large, "q^m exceeds the representable range");

  CodeSpec spec;
  spec.p = raw.p;
  spec.e = raw.e;
  spec.m = raw.m;
  spec.h = raw.h;
  spec.t = raw.t;
  spec.q = q;
  spec.Q = Q;
  spec.s = int64_t(raw.t.size());
  spec.n0 = (Q - 1) / (int64_t(raw.h) * (q - 1));
  spec.n = spec.s * spec.n0;
  return spec;
}

int coset_index(const FieldCtx& ctx, Fe x, int h) {
  if (x.is_zero()) fail(errc::zero_argument, "zero has no cyclotomic class");
  return int(ctx.log(x) % h);
}

DefiningSet build_defining_set(const FieldCtx& ctx, const CodeSpec& spec) {
  if (ctx.q() != spec.q || ctx.Q() != spec.Q)
    fail(errc::mixed_contexts, "field context does not match the spec");
  DefiningSet d;
  d.elements.reserve(spec.n);
  d.coset_ids.reserve(spec.n);
  for (int t : spec.t)
    for (int64_t i = 0; i < spec.n0; ++i) {
      d.elements.push_back(ctx.theta_pow(t + int64_t(spec.h) * i));
      d.coset_ids.push_back(t);
    }
  return d;
}

}  // namespace cyclo
