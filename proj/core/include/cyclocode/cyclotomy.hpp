#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclocode/field.hpp"

namespace cyclo {

// Unvalidated user input: the tower F_p^e = F_q <= F_(q^m) = F_Q, the class
// count h, and the selected class offsets t.
struct RawSpec {
  int64_t p = 0;
  int e = 0;
  int m = 0;
  int h = 0;
  std::vector<int> t;
};

enum class SpecViolation {
  not_prime,        // p is not a prime
  bad_tower,        // e or m is not positive
  non_divisor,      // h (q - 1) does not divide Q - 1
  h_out_of_range,   // not 1 < h < sqrt(Q) + 1
  t_empty,          // no class offsets selected
  t_out_of_range,   // some t_j outside [0, h)
  t_not_increasing  // t not strictly increasing
};

const char* to_string(SpecViolation v);

// All violations in a fixed order; empty means the spec is valid.  Exact for
// arbitrarily large towers (divisibility is tested modularly).
std::vector<SpecViolation> validate_spec(const RawSpec& raw);

// Validated parameters plus derived quantities.
struct CodeSpec {
  int64_t p;
  int e, m, h;
  std::vector<int> t;
  int64_t q;   // p^e
  int64_t Q;   // q^m
  int64_t s;   // number of selected classes, |t|
  int64_t n0;  // (Q - 1) / (h (q - 1)), block length per class
  int64_t n;   // s * n0, code length
};

// Throws errc::spec_invalid listing every violation, or field_too_large if
// the parameters are valid but Q is not representable.
CodeSpec make_spec(const RawSpec& raw);

// Index of the cyclotomic class theta^i <theta^h> containing x.
int coset_index(const FieldCtx& ctx, Fe x, int h);

// The defining set: for each offset t_j (outer index) the block
// theta^(t_j), theta^(t_j + h), ..., theta^(t_j + h (n0 - 1)).
struct DefiningSet {
  std::vector<Fe> elements;
  std::vector<int> coset_ids;
};

DefiningSet build_defining_set(const FieldCtx& ctx, const CodeSpec& spec);

}  // namespace cyclo
