#include "lpcert/interval.hpp"

#include <algorithm>
#include <optional>

#include "lpcert/error.hpp"

namespace lpcert {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw Error(ErrorCode::Precondition, "interval with lo > hi");
}

Rational Interval::mag() const { return std::max(abs(lo_), abs(hi_)); }

Rational Interval::mig() const {
  if (contains_zero()) return Rational(0);
  return std::min(abs(lo_), abs(hi_));
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(lo);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (is_point() && o.is_point()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  const Rational a = lo_ * o.lo_;
  const Rational b = lo_ * o.hi_;
  const Rational c = hi_ * o.lo_;
  const Rational d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) {
    throw Error(ErrorCode::DivisionByIntervalContainingZero, "divisor " + o.str() + " contains 0");
  }
  return *this *= Interval(Rational(1) / o.hi_, Rational(1) / o.lo_);
}

std::string Interval::decimal(int digits) const {
  return "[" + lo_.decimal(digits) + ", " + hi_.decimal(digits) + "]";
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) throw Error(ErrorCode::Precondition, "intersection of disjoint intervals");
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval sqr(const Interval& x) { return pow(x, 2); }

Interval pow(const Interval& x, int k) {
  if (k == 0) return Interval(Rational(1));
  if (k < 0) {
    if (x.contains_zero()) {
      throw Error(ErrorCode::DivisionByIntervalContainingZero, "negative power of " + x.str());
    }
    return Interval(Rational(1)) / pow(x, -k);
  }
  if (k % 2 == 1) return {lpcert::pow(x.lo(), k), lpcert::pow(x.hi(), k)};
  return {lpcert::pow(x.mig(), k), lpcert::pow(x.mag(), k)};
}

namespace {

bool perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (perfect_square(q.numerator()) && perfect_square(q.denominator())) {
    return Rational(isqrt(q.numerator()), isqrt(q.denominator()));
  }
  return std::nullopt;
}

Rational scaled_by_4k(const Rational& q, long bits) { return q * pow2(2 * bits); }

Rational sqrt_lower(const Rational& q, long bits) {
  if (auto e = exact_sqrt(q)) return *e;
  return Rational(isqrt(floor(scaled_by_4k(q, bits)))) * pow2(-bits);
}

Rational sqrt_upper(const Rational& q, long bits) {
  if (auto e = exact_sqrt(q)) return *e;
  const Integer n = ceil(scaled_by_4k(q, bits));
  Integer r = isqrt(n);
  if (r * r < n) r += 1;
  return Rational(r) * pow2(-bits);
}

}  // namespace

Interval sqrt(const Interval& x, long bits) {
  if (x.lo().sign() < 0) throw Error(ErrorCode::SqrtOfNegative, "sqrt of " + x.str());
  return {sqrt_lower(x.lo(), bits), sqrt_upper(x.hi(), bits)};
}

Interval simplify(const Interval& x, long bits) {
  return {round_dyadic(x.lo(), bits, -1), round_dyadic(x.hi(), bits, +1)};
}

Interval evaluate(const Polynomial& p, const Interval& x, long bits) {
  const auto& c = p.coefficients();
  if (c.empty()) return Interval(Rational(0));
  if (x.is_point()) return Interval(p.evaluate(x.lo()));
  Interval acc(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc *= x;
    acc += Interval(c[k]);
    if (bits >= 0) acc = simplify(acc, bits);
  }
  return acc;
}

}  // namespace lpcert
