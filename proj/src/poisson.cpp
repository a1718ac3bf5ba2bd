#include "lpcert/poisson.hpp"

#include <map>

#include "lpcert/elementary.hpp"
#include "lpcert/error.hpp"
#include "lpcert/kernels.hpp"

namespace lpcert {

namespace {

constexpr long kMaxShells = 100000;

// ceil(x) as a bit count hint.
long to_bits(const Rational& x) {
  const Integer c = ceil(x);
  if (!c.fits_slong_p()) throw Error(ErrorCode::TailBoundDiverges, "argument too large");
  return std::max(0L, c.get_si());
}

// Upper bound on exp(-x) for x >= 0, tight in relative terms.
Rational exp_neg_upper(const Rational& x) {
  const long bits = 2 * to_bits(x) + 64;
  return enclose_exp(Interval(-x), pow2(-bits)).hi();
}

Rational sum_abs_eval(const Polynomial& p, const Rational& u) {
  Rational s;
  Rational power(1);
  for (int k = 0; k <= p.degree(); ++k) {
    s += abs(p.coefficient(k)) * power;
    power *= u;
  }
  return s;
}

struct NormKey {
  bool operator()(const Interval& a, const Interval& b) const {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.hi() < b.hi();
  }
};

// Sum of p(2 pi |x|^2) e^{-pi |x|^2} over the origin and all vectors of the report.
Interval lattice_sum(const Polynomial& p, const ShortVectorReport& report, const Rational& width, Execution exec,
                     std::size_t& points) {
  std::map<Interval, long, NormKey> certain;
  std::map<Interval, long, NormKey> possible;
  for (const auto& v : report.vectors) {
    ++(v.membership == Membership::Certain ? certain : possible)[v.norm];
  }
  points = report.vectors.size() + 1;
  std::vector<Interval> norms;
  std::vector<long> weights;
  for (const auto& [norm, count] : certain) {
    norms.push_back(norm);
    weights.push_back(count);
  }
  const std::size_t n_certain = norms.size();
  for (const auto& [norm, count] : possible) {
    norms.push_back(norm);
    weights.push_back(count);
  }
  const Rational per_term = width / Rational(static_cast<long>(2 * points + 1));
  auto values = kernels::profile_at_norms(p, norms, per_term, exec);
  // A vector that may lie outside the ball contributes either its value or nothing.
  for (std::size_t i = n_certain; i < values.size(); ++i) values[i] = hull(values[i], Interval(Rational(0)));
  return Interval(p.coefficient(0)) + kernels::weighted_sum(values, weights);
}

}  // namespace

std::string poisson_verdict_name(PoissonVerdict v) {
  switch (v) {
    case PoissonVerdict::Consistent: return "consistent";
    case PoissonVerdict::Violated: return "violated";
    case PoissonVerdict::Inconclusive: return "inconclusive";
  }
  return "";
}

PoissonSides truncated_poisson_sides(const GramMatrix& gram, const RadialCertificate& cert, const Rational& radius,
                                     const PoissonOptions& options) {
  if (radius.sign() <= 0) throw Error(ErrorCode::Precondition, "truncation radius must be positive");
  if (gram.dimension() != cert.dimension()) throw Error(ErrorCode::Precondition, "lattice and certificate dimensions differ");
  const Rational bound = radius * radius;
  const Polynomial& p_hat = options.transform_override ? *options.transform_override : cert.p_hat();
  const auto primal = enumerate_vectors_below(gram, bound, options.enumeration);
  const auto dual = enumerate_vectors_below(dual_gram(gram), bound, options.enumeration);
  PoissonSides sides;
  sides.lhs = lattice_sum(cert.p(), primal, options.width, options.enumeration.execution, sides.lhs_points);
  sides.rhs = lattice_sum(p_hat, dual, options.width, options.enumeration.execution, sides.rhs_points);
  return sides;
}

namespace {

/// x > 0 rounded up to 24 significant bits: still an upper bound, but short to print.
Rational round_up_significant(const Rational& x) {
  if (x.sign() <= 0) return x;
  const long magnitude = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2)) -
                         static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
  return round_dyadic(x, 24 - magnitude, 1);
}

}  // namespace

Rational poisson_tail_bound(const Polynomial& p, int dimension, const Rational& min_norm_lo, const Rational& radius) {
  if (p.is_zero()) return Rational(0);
  const Rational r2 = radius * radius;
  if (min_norm_lo.sign() <= 0 || r2 <= min_norm_lo) {
    throw Error(ErrorCode::TailBoundDiverges, "truncation radius must exceed the minimal vector length");
  }
  // Envelope q(u) = sum |c_i| u^i >= |p(u)|; q e^{-u/2} decreases beyond the last root of q' - q/2.
  std::vector<Rational> abs_coeffs;
  for (const auto& c : p.coefficients()) abs_coeffs.push_back(abs(c));
  const Polynomial q(std::move(abs_coeffs));
  const Polynomial slope = q.derivative() - q * Rational(1, 2);
  Rational u_crit;
  if (!slope.is_zero()) {
    const auto roots = isolate_roots(slope, Region::ray(Rational(0)));
    if (!roots.empty()) u_crit = roots.back().hi;
  }

  const Interval pi = enclose_pi(pow2(-80));
  // Packing radius lower bound mu <= sqrt(M)/2, as a rational.
  const Rational quarter = min_norm_lo / Rational(4);
  const Rational mu = Rational(isqrt(quarter.numerator() * quarter.denominator()), quarter.denominator());
  if (mu.sign() <= 0) throw Error(ErrorCode::TailBoundDiverges, "minimal norm too small for shell counting");
  const Rational growth = pow2(dimension) * pow(Rational(4), q.degree());

  Rational tail;
  for (long k = 1; k <= kMaxShells; ++k) {
    const Rational kk(k);
    const Rational u_lo = Rational(2) * pi.lo() * kk * kk * r2;
    const Rational u_hi = Rational(2) * pi.hi() * kk * kk * r2;
    // Points with |x| in [kR, (k+1)R): disjoint balls of radius mu inside radius (k+1)R + mu.
    const Rational count = pow(((kk + Rational(1)) * radius + mu) / mu, dimension);
    const Rational envelope = sum_abs_eval(q, std::max(u_hi, u_crit)) * exp_neg_upper(u_lo / Rational(2));
    const Rational term = count * envelope;
    const Rational ratio = growth * exp_neg_upper(pi.lo() * r2 * Rational(2 * k + 1));
    if (u_lo >= u_crit && ratio <= Rational(1, 2)) return round_up_significant(tail + Rational(2) * term);
    tail += term;
  }
  throw Error(ErrorCode::TailBoundDiverges, "tail series did not reach its geometric regime");
}

PoissonCheckReport poisson_identity_check(const GramMatrix& gram, const RadialCertificate& cert,
                                          const Rational& radius, const Rational& tolerance,
                                          const PoissonOptions& options) {
  PoissonCheckReport report;
  report.radius = radius;
  report.tolerance = tolerance;
  const PoissonSides sides = truncated_poisson_sides(gram, cert, radius, options);
  report.lhs_truncated = sides.lhs;
  report.rhs_truncated = sides.rhs;
  report.lhs_points = sides.lhs_points;
  report.rhs_points = sides.rhs_points;

  const GramMatrix dual = dual_gram(gram);
  const Polynomial& p_hat = options.transform_override ? *options.transform_override : cert.p_hat();
  report.lhs_tail_bound =
      poisson_tail_bound(cert.p(), cert.dimension(), minimal_norm(gram, options.enumeration).lo(), radius);
  report.rhs_tail_bound =
      poisson_tail_bound(p_hat, cert.dimension(), minimal_norm(dual, options.enumeration).lo(), radius);

  const long bits = bits_for_width(options.width) + 16;
  const Interval det = gram.determinant();
  if (!det.certainly_positive()) throw Error(ErrorCode::NotPositiveDefinite, "Gram determinant not positive");
  report.covolume = sqrt(det, bits);
  report.lhs_total = sides.lhs + Interval(-report.lhs_tail_bound, report.lhs_tail_bound);
  report.rhs_total_scaled =
      simplify((sides.rhs + Interval(-report.rhs_tail_bound, report.rhs_tail_bound)) / report.covolume, bits);

  if (!report.lhs_total.intersects(report.rhs_total_scaled)) {
    report.verdict = PoissonVerdict::Violated;
  } else if (report.lhs_total.width() <= tolerance && report.rhs_total_scaled.width() <= tolerance) {
    report.verdict = PoissonVerdict::Consistent;
  } else {
    report.verdict = PoissonVerdict::Inconclusive;
  }
  return report;
}

}  // namespace lpcert
