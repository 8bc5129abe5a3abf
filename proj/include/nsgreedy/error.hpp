#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nsgreedy {

/// All arithmetic is done in signed 64-bit integers; intermediate results that
/// leave the representable range raise ErrorCode::Overflow.
using Int = std::int64_t;

enum class ErrorCode {
  EmptySet,
  NonPositiveElement,
  GcdNotOne,
  Overflow,
  NegativeInput,
  NotAMember,
  NotRepresentable,
  CapExceeded,
  TooFewGenerators,
  TooManyGenerators,
  InvalidParameter,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return out;
}

}  // namespace nsgreedy
