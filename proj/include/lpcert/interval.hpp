#pragma once

#include <string>

#include "lpcert/polynomial.hpp"
#include "lpcert/rational.hpp"

namespace lpcert {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// Field operations are exact set images (no rounding). Operations that need
/// rounding (sqrt, simplify) round outward only, onto a dyadic grid of
/// spacing 2^-bits, so the slack they add is at most 2^-bits per endpoint.
class Interval {
 public:
  Interval() = default;
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT(google-explicit-constructor)
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / Rational(2); }
  Rational mag() const;  // max |x|
  Rational mig() const;  // min |x|

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return contains(Rational(0)); }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool certainly_positive() const { return lo_.sign() > 0; }
  bool certainly_negative() const { return hi_.sign() < 0; }
  /// Certified strict order: every point of this is below every point of o.
  bool certainly_less(const Interval& o) const { return hi_ < o.lo_; }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend bool operator==(const Interval& a, const Interval& b) = default;

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }
  /// "[lo, hi]" as truncated decimals, display only.
  std::string decimal(int digits = 12) const;

 private:
  Rational lo_;
  Rational hi_;
};

Interval hull(const Interval& a, const Interval& b);
/// Throws Precondition if the intervals are disjoint.
Interval intersect(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
/// Exact image of x -> x^k for integer k (negative k requires 0 not in x).
Interval pow(const Interval& x, int k);
Interval sqr(const Interval& x);
/// Outward-rounded square root: the result contains sqrt(x) and each endpoint moves
/// by at most 2^-bits; exact rational squares stay exact. Throws SqrtOfNegative if x.lo < 0.
Interval sqrt(const Interval& x, long bits);
/// Outward rounding of both endpoints to multiples of 2^-bits.
Interval simplify(const Interval& x, long bits);
/// Interval Horner evaluation of p on x; encloses the exact image p(x).
Interval evaluate(const Polynomial& p, const Interval& x, long bits = -1);

}  // namespace lpcert
