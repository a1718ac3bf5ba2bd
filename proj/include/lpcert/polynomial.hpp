#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lpcert/rational.hpp"

namespace lpcert {

/// Univariate polynomial in u with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are stripped, so the zero polynomial has no coefficients
/// and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, int degree);
  /// Product of (u - root)^multiplicity.
  static Polynomial from_root(const Rational& root, int multiplicity = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& u) const { return evaluate(u); }
  Rational evaluate(const Rational& u) const;
  Polynomial derivative() const;
  /// u |-> p(scale * u + shift).
  Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// "20812 + 756*u + ..." (integers shown without denominator).
  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws for b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);
/// Yun's algorithm: returns a_1, a_2, ... with p = c * prod a_i^i, each a_i monic squarefree.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);
/// Product of the odd-multiplicity squarefree factors; its real roots are where p changes sign.
Polynomial sign_changing_part(const Polynomial& p);
/// Positive scalar multiple with coprime integer coefficients.
Polynomial primitive_part(const Polynomial& p);
/// True iff p = lambda * q for some nonzero rational lambda.
bool proportional(const Polynomial& p, const Polynomial& q);

}  // namespace lpcert
