#include "lpcert/radial.hpp"

#include <algorithm>

#include "lpcert/elementary.hpp"
#include "lpcert/error.hpp"

namespace lpcert {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorCode::InvalidDimension, "dimension " + std::to_string(n) + " outside [1, 24]");
  }
}

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return f;
}

}  // namespace

Polynomial laguerre_polynomial(int k, const Rational& alpha) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    Rational rising(1);
    for (int i = j + 1; i <= k; ++i) rising *= alpha + Rational(i);
    Rational v = rising / (factorial(k - j) * factorial(j));
    c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? v : -v;
  }
  return Polynomial(std::move(c));
}

LaguerreBasis::LaguerreBasis(const Rational& alpha, int max_degree) : alpha_(alpha) {
  for (int k = 0; k <= max_degree; ++k) elements_.push_back(laguerre_polynomial(k, alpha));
}

LaguerreBasis LaguerreBasis::for_dimension(int dimension, int max_degree) {
  check_dimension(dimension);
  return {Rational(dimension, 2) - Rational(1), max_degree};
}

std::vector<Rational> LaguerreBasis::expand(const Polynomial& p) const {
  if (p.degree() > max_degree()) throw Error(ErrorCode::Precondition, "polynomial degree exceeds basis");
  std::vector<Rational> coords(elements_.size());
  Polynomial rest = p;
  // Triangular: L_k has exact degree k.
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = rest.coefficient(k) / element(k).leading();
    coords[static_cast<std::size_t>(k)] = c;
    rest -= element(k) * c;
  }
  return coords;
}

Polynomial LaguerreBasis::combine(std::span<const Rational> coords) const {
  Polynomial out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!coords[k].is_zero()) out += element(static_cast<int>(k)) * coords[k];
  }
  return out;
}

Polynomial fourier_transform_polynomial(const Polynomial& p, int dimension) {
  check_dimension(dimension);
  if (p.is_zero()) return p;
  const auto basis = LaguerreBasis::for_dimension(dimension, p.degree());
  auto coords = basis.expand(p);
  for (std::size_t k = 1; k < coords.size(); k += 2) coords[k] = -coords[k];
  return basis.combine(coords);
}

RadialCertificate::RadialCertificate(int dimension, Polynomial p, std::optional<Rational> sign_change_radius)
    : dimension_(dimension),
      p_(std::move(p)),
      p_hat_(fourier_transform_polynomial(p_, dimension)),
      radius_(std::move(sign_change_radius)) {
  if (radius_ && radius_->sign() <= 0) throw Error(ErrorCode::Precondition, "sign-change radius must be positive");
}

Interval u_of_norm(const Interval& norm, const Rational& width) {
  if (norm.lo().sign() < 0) throw Error(ErrorCode::Precondition, "negative norm");
  if (norm == Interval(Rational(0))) return norm;
  const Interval pi = enclose_pi(width / (Rational(4) * (norm.hi() + Rational(1))));
  return simplify(Interval(Rational(2)) * pi * norm, bits_for_width(width) + 2);
}

Interval profile_range(const Polynomial& p, const Interval& u, const Rational& width) {
  if (p.is_zero()) return Interval(Rational(0));
  const long bits = bits_for_width(width) + 8;
  const Interval half(Rational(1, 2));
  const Interval pu = evaluate(p, u, bits);
  const Rational exp_width = width / (Rational(4) * (pu.mag() + Rational(1)));
  auto h_at = [&](const Rational& x) {
    return Interval(p.evaluate(x)) * enclose_exp(Interval(-x / Rational(2)), exp_width);
  };
  if (u.is_point()) return simplify(h_at(u.lo()), bits);

  const Polynomial slope = p.derivative() - p * Rational(1, 2);
  const Interval du = evaluate(slope, u, bits);
  if (du.certainly_negative()) return simplify(Interval(h_at(u.hi()).lo(), h_at(u.lo()).hi()), bits);
  if (du.certainly_positive()) return simplify(Interval(h_at(u.lo()).lo(), h_at(u.hi()).hi()), bits);

  const Interval e = enclose_exp(-(u * half), exp_width);
  const Interval naive = pu * e;
  const Rational m = u.mid();
  const Interval mean_value = h_at(m) + du * e * (u - Interval(m));
  return simplify(intersect(naive, mean_value), bits);
}

namespace {

// Crude bound on |d/du (p(u) e^{-u/2})| for u in [0, umax], used only to size precision.
Rational slope_scale(const Polynomial& p, const Rational& umax) {
  Rational s(1);
  Rational power(1);
  const Rational base = std::max(umax, Rational(1));
  for (int k = 0; k <= p.degree(); ++k) {
    s += abs(p.coefficient(k)) * Rational(k + 1) * power;
    power *= base;
  }
  return s;
}

}  // namespace

Interval eval_profile_at_norm(const Polynomial& p, const Interval& norm, const Rational& target_width) {
  if (norm.lo().sign() < 0) throw Error(ErrorCode::Precondition, "negative norm");
  const Rational scale = slope_scale(p, Rational(7) * norm.hi() + Rational(1));
  Rational w = target_width / Rational(16);
  std::optional<Interval> previous;
  for (int round = 0; round < 8; ++round, w *= pow2(-24)) {
    const Interval u = u_of_norm(norm, w / scale);
    const Interval value = profile_range(p, u, w);
    if (value.width() <= target_width) return value;
    if (!norm.is_point() && previous && value.width() * Rational(2) > previous->width()) return value;
    previous = value;
  }
  if (!norm.is_point()) return *previous;
  throw Error(ErrorCode::PrecisionUnreachable, "radial evaluation did not reach the target width");
}

Interval eval_radial(const RadialCertificate& cert, const Interval& radius, RadialSide side,
                     const Rational& target_width) {
  if (radius.lo().sign() < 0) throw Error(ErrorCode::Precondition, "radius interval must be nonnegative");
  return eval_profile_at_norm(cert.profile(side), sqr(radius), target_width);
}

Constraint Constraint::parse(const std::string& text) {
  if (text == "f0=fhat0" || text == "equal-at-origin") return equal_at_origin();
  const auto first = text.find(':');
  if (first == std::string::npos) throw Error(ErrorCode::Parse, "bad constraint '" + text + "'");
  const std::string kind = text.substr(0, first);
  const auto second = text.find(':', first + 1);
  const std::string at = text.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1);
  int m = 1;
  if (second != std::string::npos) {
    try {
      m = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad multiplicity in '" + text + "'");
    }
  }
  if (kind == "root") return profile_root(Rational::parse(at), m);
  if (kind == "hat-root") return transform_root(Rational::parse(at), m);
  throw Error(ErrorCode::Parse, "unknown constraint kind '" + kind + "'");
}

std::string Constraint::str() const {
  switch (kind) {
    case Kind::ProfileRoot: return "root:" + at.str() + ":" + std::to_string(multiplicity);
    case Kind::TransformRoot: return "hat-root:" + at.str() + ":" + std::to_string(multiplicity);
    case Kind::EqualAtOrigin: return "f0=fhat0";
  }
  return "";
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Polynomial nth_derivative(Polynomial p, int j) {
  for (int i = 0; i < j; ++i) p = p.derivative();
  return p;
}

}  // namespace

RadialCertificate construct_certificate(int dimension, int degree, std::span<const Constraint> constraints,
                                        std::optional<Rational> sign_change_radius) {
  check_dimension(dimension);
  if (degree < 0) throw Error(ErrorCode::DegenerateConstraint, "negative degree");
  const auto unknowns = static_cast<std::size_t>(degree) + 1;
  std::vector<Polynomial> monomials;
  std::vector<Polynomial> transforms;
  for (int i = 0; i <= degree; ++i) {
    monomials.push_back(Polynomial::monomial(Rational(1), i));
    transforms.push_back(fourier_transform_polynomial(monomials.back(), dimension));
  }

  Matrix rows;
  for (const auto& c : constraints) {
    if (c.kind != Constraint::Kind::EqualAtOrigin && (c.multiplicity < 1 || c.multiplicity > degree + 1)) {
      throw Error(ErrorCode::DegenerateConstraint, "multiplicity out of range in " + c.str());
    }
    if (c.kind == Constraint::Kind::EqualAtOrigin) {
      std::vector<Rational> row(unknowns);
      for (std::size_t i = 0; i < unknowns; ++i) {
        row[i] = monomials[i].coefficient(0) - transforms[i].coefficient(0);
      }
      rows.push_back(std::move(row));
      continue;
    }
    const auto& family = c.kind == Constraint::Kind::ProfileRoot ? monomials : transforms;
    for (int j = 0; j < c.multiplicity; ++j) {
      std::vector<Rational> row(unknowns);
      for (std::size_t i = 0; i < unknowns; ++i) row[i] = nth_derivative(family[i], j).evaluate(c.at);
      rows.push_back(std::move(row));
    }
  }

  const auto pivots = rref(rows, unknowns);
  const std::size_t nullity = unknowns - pivots.size();
  if (nullity == 0) throw Error(ErrorCode::Overdetermined, "only the zero polynomial satisfies the constraints");
  if (nullity > 1) {
    throw Error(ErrorCode::Underdetermined, "solution space has dimension " + std::to_string(nullity));
  }
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  std::vector<Rational> coeffs(unknowns);
  coeffs[free_col] = Rational(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = -rows[r][free_col];

  Polynomial p = primitive_part(Polynomial(std::move(coeffs)));
  const auto& c = p.coefficients();
  const auto first_nonzero = std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
  if (first_nonzero->sign() < 0) p = -p;
  return {dimension, std::move(p), std::move(sign_change_radius)};
}

LpConditions verify_lp_conditions(const RadialCertificate& cert, const Rational& width) {
  if (!cert.sign_change_radius()) {
    throw Error(ErrorCode::UnverifiedCertificate, "certificate has no sign-change radius");
  }
  const Rational r = *cert.sign_change_radius();
  LpConditions out;
  out.u_threshold = u_of_norm(Interval(r * r), width).lo();
  try {
    out.negativity = certify_sign_on_region(cert.p(), Region::ray(out.u_threshold), SignClaim::NonPositive);
  } catch (const ClaimFalseError& e) {
    throw Error(ErrorCode::UnverifiedCertificate,
                "f <= 0 beyond the radius fails near u = " + e.witness().lo.decimal(6));
  }
  try {
    out.transform_nonneg = certify_sign_on_region(cert.p_hat(), Region::ray(Rational(0)), SignClaim::NonNegative);
  } catch (const ClaimFalseError& e) {
    throw Error(ErrorCode::UnverifiedCertificate, "f_hat >= 0 fails near u = " + e.witness().lo.decimal(6));
  }
  out.transform_at_origin = cert.transform_at_origin();
  if (out.transform_at_origin.sign() <= 0) throw Error(ErrorCode::UnverifiedCertificate, "f_hat(0) must be positive");
  return out;
}

Interval ball_volume(int dimension, const Interval& radius, const Rational& width) {
  check_dimension(dimension);
  const int half = dimension / 2;
  const Interval pi = enclose_pi(width / Rational(64));
  Interval coeff = pow(pi, half);
  if (dimension % 2 == 0) {
    coeff = coeff / Interval(factorial(half));
  } else {
    // Gamma(n/2 + 1) = sqrt(pi) n!! / 2^((n+1)/2), so the sqrt(pi) cancels.
    Rational double_fact(1);
    for (int k = dimension; k > 1; k -= 2) double_fact *= Rational(k);
    coeff = coeff * Interval(pow2(half + 1) / double_fact);
  }
  return coeff * pow(radius, dimension);
}

Interval lp_density_bound(const RadialCertificate& cert, const LpConditions& conditions, const Rational& width) {
  if (!cert.sign_change_radius()) {
    throw Error(ErrorCode::UnverifiedCertificate, "certificate has no sign-change radius");
  }
  const Rational r = *cert.sign_change_radius();
  const bool region_ok = conditions.negativity.region.kind == Region::Kind::Ray &&
                         conditions.negativity.region.lo <= u_of_norm(Interval(r * r), width).lo() &&
                         conditions.transform_nonneg.region.kind == Region::Kind::Ray &&
                         conditions.transform_nonneg.region.lo.sign() <= 0;
  const bool claims_ok = (conditions.negativity.claim == SignClaim::NonPositive ||
                          conditions.negativity.claim == SignClaim::Negative) &&
                         (conditions.transform_nonneg.claim == SignClaim::NonNegative ||
                          conditions.transform_nonneg.claim == SignClaim::Positive);
  if (!region_ok || !claims_ok || !recheck(cert.p(), conditions.negativity) ||
      !recheck(cert.p_hat(), conditions.transform_nonneg) ||
      conditions.transform_at_origin != cert.transform_at_origin() || cert.transform_at_origin().sign() <= 0) {
    throw Error(ErrorCode::UnverifiedCertificate, "sign conditions do not match the certificate");
  }
  const Interval volume = ball_volume(cert.dimension(), Interval(r / Rational(2)), width);
  return simplify(volume * Interval(cert.normalization() / cert.transform_at_origin()), bits_for_width(width) + 4);
}

}  // namespace lpcert
