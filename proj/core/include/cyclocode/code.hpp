#pragma once

#include <map>
#include <vector>

#include "cyclocode/characters.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/field.hpp"

namespace cyclo {

// Trace code attached to a list of defining elements d_1..d_n of F_Q: the
// codeword of the message x in F_Q is (Tr_{Q/q}(x d_1), ..., Tr_{Q/q}(x d_n))
// with symbols in F_q.
class LinearCode {
 public:
  LinearCode(const FieldCtx& ctx, std::vector<Fe> defining);

  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<Fe>& defining() const { return defining_; }
  int64_t length() const { return int64_t(defining_.size()); }
  int message_dim() const { return ctx_->m(); }  // dimension of the message space
  int rank() const { return rank_; }             // actual code dimension over F_q

  // m x n digit matrix whose row i is the codeword of theta^i.
  std::vector<uint16_t> generator_matrix() const;
  std::vector<uint16_t> codeword(Fe x) const;
  int64_t codeword_weight(Fe x) const;

 private:
  const FieldCtx* ctx_;
  std::vector<Fe> defining_;
  int rank_ = 0;
};

struct WeightDistribution {
  std::map<int64_t, int64_t> counts;  // weight -> number of messages
  int rank = 0;
  int64_t total = 0;
};

// Exhaustive enumeration of all Q messages.
WeightDistribution weight_distribution(const LinearCode& code, const Budgets& budgets = {});

// Weight of the codeword of x recomputed through exponential sums:
// w = (s (Q - 1) + s - sum_j S(x theta^(t_j))) / (q h).
// coset_sums must be chars.exponential_sums_by_coset(spec.h).
int64_t codeword_weight_via_sums(const CharTable& chars, const CodeSpec& spec,
                                 const std::vector<cd>& coset_sums, Fe x);

struct DualDistanceCheck {
  bool no_zero_column = false;
  bool no_proportional_columns = false;
  bool at_least_3() const { return no_zero_column && no_proportional_columns; }
};

// The dual code has minimum distance >= 3 exactly when no generator column is
// zero and no two columns are F_q-multiples of each other.
DualDistanceCheck dual_distance_at_least_3(const LinearCode& code);

}  // namespace cyclo
