/// @file checked.hpp
/// @brief Overflow-checked 64-bit integer arithmetic.

#pragma once

#include <cstdint>

#include "strateuler/errors.hpp"

namespace strateuler {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow("subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("multiplication");
  return r;
}

/// (-1)^n for a nonnegative exponent.
constexpr Int sign_power(Int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace strateuler
