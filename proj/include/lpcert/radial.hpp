#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpcert/interval.hpp"
#include "lpcert/polynomial.hpp"
#include "lpcert/sturm.hpp"

namespace lpcert {

/// Largest dimension accepted for radial certificates.
inline constexpr int kMaxDimension = 24;

/// Generalized Laguerre polynomial L_k^alpha(u), exact.
Polynomial laguerre_polynomial(int k, const Rational& alpha);

/// L_0^alpha .. L_d^alpha with alpha = n/2 - 1. The profiles L_k(2 pi |x|^2) e^{-pi |x|^2}
/// on R^n are Fourier eigenfunctions with eigenvalue (-1)^k.
class LaguerreBasis {
 public:
  LaguerreBasis(const Rational& alpha, int max_degree);
  static LaguerreBasis for_dimension(int dimension, int max_degree);

  const Rational& alpha() const { return alpha_; }
  int max_degree() const { return static_cast<int>(elements_.size()) - 1; }
  const Polynomial& element(int k) const { return elements_.at(static_cast<std::size_t>(k)); }

  /// Coordinates of p (deg p <= max_degree) in this basis.
  std::vector<Rational> expand(const Polynomial& p) const;
  Polynomial combine(std::span<const Rational> coords) const;

 private:
  Rational alpha_;
  std::vector<Polynomial> elements_;
};

/// p_hat with FT[p(2 pi |x|^2) e^{-pi |x|^2}](t) = p_hat(2 pi |t|^2) e^{-pi |t|^2} on R^n,
/// for the transform kernel e^{2 pi i <x,t>}. Throws InvalidDimension unless 1 <= n <= 24.
Polynomial fourier_transform_polynomial(const Polynomial& p, int dimension);

enum class RadialSide { Function, Transform };

/// f(x) = p(2 pi |x|^2) e^{-pi |x|^2} on R^n with a claimed sign-change radius r
/// (f <= 0 for |x| >= r). The transform profile is always recomputed from p.
class RadialCertificate {
 public:
  RadialCertificate(int dimension, Polynomial p, std::optional<Rational> sign_change_radius = std::nullopt);

  int dimension() const { return dimension_; }
  const Polynomial& p() const { return p_; }
  const Polynomial& p_hat() const { return p_hat_; }
  const Polynomial& profile(RadialSide side) const { return side == RadialSide::Function ? p_ : p_hat_; }
  const std::optional<Rational>& sign_change_radius() const { return radius_; }
  /// f(0) = p(0)
  Rational normalization() const { return p_.coefficient(0); }
  /// f_hat(0) = p_hat(0)
  Rational transform_at_origin() const { return p_hat_.coefficient(0); }

  RadialCertificate with_radius(std::optional<Rational> r) const { return {dimension_, p_, std::move(r)}; }

 private:
  int dimension_;
  Polynomial p_;
  Polynomial p_hat_;
  std::optional<Rational> radius_;
};

/// Enclosure of 2 pi * norm, slack <= width.
Interval u_of_norm(const Interval& norm, const Rational& width);

/// Range enclosure of h(u) = p(u) e^{-u/2} over u. Uses the sign of p' - p/2 on u to
/// reduce to endpoint evaluations when h is monotone there; otherwise the mean-value
/// form intersected with the naive product.
Interval profile_range(const Polynomial& p, const Interval& u, const Rational& width);

/// Enclosure of p(2 pi r^2) e^{-pi r^2} over all r with r^2 in norm.
Interval eval_profile_at_norm(const Polynomial& p, const Interval& norm, const Rational& target_width);

/// Enclosure of f (or f_hat) over every radius in the interval. Requires radius.lo >= 0.
Interval eval_radial(const RadialCertificate& cert, const Interval& radius, RadialSide side,
                     const Rational& target_width);

/// A linear condition on the coefficients of p.
struct Constraint {
  enum class Kind { ProfileRoot, TransformRoot, EqualAtOrigin };

  Kind kind = Kind::EqualAtOrigin;
  Rational at;
  int multiplicity = 1;

  static Constraint profile_root(const Rational& u0, int m = 1) { return {Kind::ProfileRoot, u0, m}; }
  static Constraint transform_root(const Rational& u0, int m = 1) { return {Kind::TransformRoot, u0, m}; }
  static Constraint equal_at_origin() { return {Kind::EqualAtOrigin, Rational(0), 1}; }
  /// "root:U0:M", "hat-root:U0:M" or "f0=fhat0".
  static Constraint parse(const std::string& text);
  std::string str() const;
  int rows() const { return kind == Kind::EqualAtOrigin ? 1 : multiplicity; }
};

/// Solves the constraints exactly for p of the given degree. The solution must be unique
/// up to scale; it is returned with coprime integer coefficients and p(0) > 0 (or, when
/// p(0) = 0, lowest nonzero coefficient > 0).
/// Throws Overdetermined, Underdetermined, DegenerateConstraint, InvalidDimension.
RadialCertificate construct_certificate(int dimension, int degree, std::span<const Constraint> constraints,
                                        std::optional<Rational> sign_change_radius = std::nullopt);

/// Verified hypotheses of the linear-programming bound.
struct LpConditions {
  Rational u_threshold;            // rational lower bound of 2 pi r^2
  SignCertificate negativity;      // p <= 0 on [u_threshold, inf)
  SignCertificate transform_nonneg;  // p_hat >= 0 on [0, inf)
  Rational transform_at_origin;    // p_hat(0) > 0
};

/// Throws UnverifiedCertificate when a hypothesis is missing or false.
LpConditions verify_lp_conditions(const RadialCertificate& cert, const Rational& width);

/// Volume of the n-ball over a radius enclosure.
Interval ball_volume(int dimension, const Interval& radius, const Rational& width);

/// vol(B_{r/2}) * f(0) / f_hat(0): an upper bound on packing density in R^n.
/// Rechecks the supplied conditions against cert; throws UnverifiedCertificate on mismatch.
Interval lp_density_bound(const RadialCertificate& cert, const LpConditions& conditions, const Rational& width);

}  // namespace lpcert
