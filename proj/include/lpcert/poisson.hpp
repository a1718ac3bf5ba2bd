#pragma once

#include <optional>
#include <string>

#include "lpcert/lattice.hpp"
#include "lpcert/radial.hpp"

namespace lpcert {

enum class PoissonVerdict { Consistent, Violated, Inconclusive };

std::string poisson_verdict_name(PoissonVerdict v);

struct PoissonOptions {
  Rational width = Rational(1, 1000000) * Rational(1, 1000000);  // per-side enclosure target
  EnumerationOptions enumeration;
  /// Replaces the recomputed transform profile (used to confirm that a wrong
  /// transform is detected); never set in normal operation.
  std::optional<Polynomial> transform_override;
};

/// Sums of f over lattice points and of f_hat over dual points with norm <= R^2.
struct PoissonSides {
  Interval lhs;
  Interval rhs;
  std::size_t lhs_points = 0;  // including the origin
  std::size_t rhs_points = 0;
};

PoissonSides truncated_poisson_sides(const GramMatrix& gram, const RadialCertificate& cert, const Rational& radius,
                                     const PoissonOptions& options = {});

/// Upper bound on sum_{|x| > R} |p(2 pi |x|^2)| e^{-pi |x|^2} over a lattice with minimal
/// norm at least min_norm_lo in dimension n, by shell counting against the decaying envelope.
/// Throws TailBoundDiverges if R^2 <= min_norm_lo.
Rational poisson_tail_bound(const Polynomial& p, int dimension, const Rational& min_norm_lo, const Rational& radius);

struct PoissonCheckReport {
  std::string lattice_id;
  std::string certificate_id;
  Rational radius;
  Rational tolerance;
  Interval lhs_truncated;
  Interval rhs_truncated;
  Rational lhs_tail_bound;
  Rational rhs_tail_bound;
  Interval covolume;
  Interval lhs_total;         // lhs_truncated +- tail
  Interval rhs_total_scaled;  // (rhs_truncated +- tail) / covolume
  std::size_t lhs_points = 0;
  std::size_t rhs_points = 0;
  PoissonVerdict verdict = PoissonVerdict::Inconclusive;
};

/// Consistent iff both totals intersect and each has width <= tolerance; Violated iff
/// they are disjoint; Inconclusive otherwise.
PoissonCheckReport poisson_identity_check(const GramMatrix& gram, const RadialCertificate& cert,
                                          const Rational& radius, const Rational& tolerance,
                                          const PoissonOptions& options = {});

}  // namespace lpcert
