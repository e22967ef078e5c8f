#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

enum class errc {
  not_prime,
  field_too_large,
  no_primitive_poly,
  mixed_contexts,
  zero_argument,
  dimension_mismatch,
  spec_invalid,
  rank_deficient,
  budget_exceeded,
  non_integer_result,
  consistency_failure,
  grid_parse_error,
  io_error,
};

// Coarse failure classes; the CLI maps them to process exit codes
// (validation -> 2, budget -> 3, internal -> 4).
enum class error_category { validation, budget, internal };

constexpr error_category category_of(errc c) {
  switch (c) {
    case errc::budget_exceeded:
    case errc::field_too_large:
      return error_category::budget;
    case errc::non_integer_result:
    case errc::consistency_failure:
    case errc::mixed_contexts:
      return error_category::internal;
    default:
      return error_category::validation;
  }
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }
  error_category category() const { return category_of(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cyclo
