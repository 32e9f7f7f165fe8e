#include <gonal/wide_int.hpp>

#include <algorithm>
#include <limits>

namespace gonal {

i128 checked_pow(i128 a, int b) {
  if (b < 0) throw std::invalid_argument("checked_pow: negative exponent");
  i128 r = 1;
  for (int i = 0; i < b; ++i) r = checked_mul(r, a);
  return r;
}

i128 gcd(i128 a, i128 b) {
  // Magnitudes only; i128 min would overflow on negation, but no caller
  // produces it (all values come from checked arithmetic on real inputs).
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Accumulate digits on the unsigned type so i128 min round-trips too.
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

i128 isqrt(i128 v) {
  if (v < 0) throw std::invalid_argument("isqrt: negative argument");
  if (v < 2) return v;
  // Newton iteration from a double seed; correct the final +-1 drift exactly.
  i128 x = static_cast<i128>(__builtin_sqrt(static_cast<double>(v)));
  while (x > 0 && x > v / x) --x;
  while ((x + 1) <= v / (x + 1)) ++x;
  return x;
}

std::int64_t to_int64(i128 v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace gonal
