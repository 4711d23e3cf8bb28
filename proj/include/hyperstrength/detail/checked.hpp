#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace hyperstrength::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("weight sum overflows 64 bits");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("weight product overflows 64 bits");
  }
  return out;
}

// Threshold arithmetic (2k(n - kappa), 2^i k, ...) only ever compares against
// weights that fit in 64 bits, so clamping at the maximum is exact for those
// comparisons.
inline std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return out;
}

inline std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return out;
}

}  // namespace hyperstrength::detail
