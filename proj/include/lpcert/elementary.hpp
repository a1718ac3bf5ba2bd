#pragma once

#include <functional>
#include <string>

#include "lpcert/interval.hpp"

namespace lpcert {

/// Enclosure of pi of width <= target_width (Machin's formula, alternating tails).
/// Enclosures are nested: a smaller target never yields a wider or non-contained result.
/// Throws PrecisionUnreachable past max_terms series terms.
Interval enclose_pi(const Rational& target_width, long max_terms = 1L << 20);

/// Enclosure of exp over x. The rounding slack added on top of the exact image is
/// at most target_width (monotonicity: only the endpoints are evaluated).
Interval enclose_exp(const Interval& x, const Rational& target_width);

/// Enclosure of cos over x with at most target_width rounding slack; argument
/// reduction by multiples of 2*pi, extrema at multiples of pi folded in.
Interval enclose_cos(const Interval& x, const Rational& target_width);

/// Lower bound for exp(q) from a plain Taylor truncation (all terms positive for
/// q >= 0, reciprocal otherwise). Independent of enclose_exp; used as a cross-check.
Rational exp_lower_by_truncation(const Rational& q, int terms);

enum class Decision { True, False, Inconclusive };

std::string decision_name(Decision d);

/// Outcome of the strict-inequality protocol "lhs < rhs".
struct StrictComparison {
  Decision decision = Decision::Inconclusive;
  Interval lhs;
  Interval rhs;
  Rational width_used;
};

/// An enclosure producer: given a target width, returns an enclosure.
using Enclosure = std::function<Interval(const Rational& target_width)>;

/// Certifies lhs < rhs iff enclosure(lhs).hi < enclosure(rhs).lo; False iff
/// lhs.lo >= rhs.hi; otherwise shrinks the width by 2^-32 up to max_refine times,
/// then reports Inconclusive.
StrictComparison certify_less(const Enclosure& lhs, const Enclosure& rhs, const Rational& width, int max_refine);

}  // namespace lpcert
