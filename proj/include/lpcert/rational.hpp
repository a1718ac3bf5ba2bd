#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lpcert {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Serialized as "num/den" (e.g. "-216/1"). `parse` additionally accepts plain
/// integers, fractions, and terminating decimals with an optional exponent
/// ("1.084", "1e-12"); decimals are read as the exact rational they denote.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value);

  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "num/den", denominator always present.
  std::string str() const;
  /// Exact decimal rendering truncated toward zero after `digits` digits; display only.
  std::string decimal(int digits = 12) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& x, int exponent);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);
/// 2^k as a rational (k may be negative).
Rational pow2(long k);
/// Smallest k >= 0 with 2^-k <= width. Requires width > 0.
long bits_for_width(const Rational& width);
/// x rounded down (dir < 0) or up (dir > 0) to a multiple of 2^-bits.
Rational round_dyadic(const Rational& x, long bits, int dir);
/// Integer floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

}  // namespace lpcert
