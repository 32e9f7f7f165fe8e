#pragma once

#include <gonal/wide_int.hpp>

#include <string>

namespace gonal {

// Exact rational number on checked 128-bit integers.
//
// Every quantity with a fractional intermediate (genus before the
// integrality check, supersingular masses, point-count lower bounds, screen
// margins) is carried as a Rational; floating point never enters any
// computation or serialization.  Invariants maintained by every operation:
// denominator > 0 and gcd(|num|, den) = 1.  Comparisons cross-multiply with
// overflow-checked arithmetic, so they are exact or they throw — never
// silently wrong.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i128 value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(i128 num, i128 den);

  i128 numerator() const { return num_; }
  i128 denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // "a/b" reduced, or plain "a" for integers.  This is the only serialized
  // form; machine formats reuse it verbatim.
  std::string str() const;

  Rational operator-() const { return Rational(checked_sub(0, num_), den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    // Reduced canonical form makes equality structural.
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  i128 num_;
  i128 den_;
};

}  // namespace gonal
