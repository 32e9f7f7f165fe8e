#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gonal {

// Signed 128-bit integers back every quantity that can outgrow int64_t
// (level bounds reach ~1.7e27 for d = 10^6).  All arithmetic that could
// conceivably wrap goes through the checked_* helpers, which throw instead
// of wrapping: silent overflow is never acceptable here.
using i128 = __int128;

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i128 addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i128 subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 multiplication overflow");
  return r;
}

// b >= 0; repeated checked multiplication, so astronomically large powers
// fail loudly rather than wrap.
i128 checked_pow(i128 a, int b);

// std::gcd is not required to accept __int128, so provide our own.
// Result is non-negative; gcd(0, 0) = 0.
i128 gcd(i128 a, i128 b);

// Decimal rendering (std::to_string has no __int128 overload).
std::string to_string(i128 v);

// Largest s with s*s <= v (v >= 0).
i128 isqrt(i128 v);

// Throwing narrowing conversion for values that must fit in an int64_t
// (loop bounds, serialized counts).
std::int64_t to_int64(i128 v);

}  // namespace gonal
