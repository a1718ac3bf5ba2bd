#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpcert/error.hpp"
#include "lpcert/polynomial.hpp"

namespace lpcert {

/// A subset of the real line with rational endpoints.
struct Region {
  enum class Kind { Point, Closed, Open, Ray };

  Kind kind = Kind::Point;
  Rational lo;
  Rational hi;  // unused for Point and Ray

  static Region point(const Rational& a) { return {Kind::Point, a, a}; }
  static Region closed(const Rational& a, const Rational& b);
  static Region open(const Rational& a, const Rational& b);
  /// [a, +inf)
  static Region ray(const Rational& a) { return {Kind::Ray, a, a}; }

  bool contains(const Rational& x) const;
  std::string str() const;
};

enum class SignClaim { NonNegative, Positive, NonPositive, Negative };

std::string claim_symbol(SignClaim claim);
bool claim_holds_at(SignClaim claim, const Rational& value);

std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Sign variations of the sequence at x, zeros skipped.
int sign_variations_at(const std::vector<Polynomial>& seq, const Rational& x);
int sign_variations_at_infinity(const std::vector<Polynomial>& seq);

/// Distinct real roots of p (no multiplicity) in the region, with the half-open
/// convention: Closed [a,b] counts roots in (a,b], Ray [a,inf) counts (a,inf),
/// Open (a,b) counts (a,b), Point counts whether p(a) = 0.
/// Throws ZeroPolynomial for p == 0.
int sturm_root_count(const Polynomial& p, const Region& region);
/// Distinct real roots in the region taken literally (endpoints included where the region includes them).
int count_roots_in(const Polynomial& p, const Region& region);

/// [lo, hi] containing exactly one distinct real root; lo == hi when the root is that rational.
struct RootBracket {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Isolating brackets for every distinct real root of p inside the region, sorted,
/// pairwise disjoint, each of width <= max_width when given.
std::vector<RootBracket> isolate_roots(const Polynomial& p, const Region& region,
                                       const std::optional<Rational>& max_width = std::nullopt);

/// Cauchy bound: every real root has |root| < bound.
Rational root_bound(const Polynomial& p);

/// Replayable evidence that a sign claim holds for p on a region.
struct SignCertificate {
  Region region;
  SignClaim claim = SignClaim::NonNegative;
  int distinct_roots = 0;       // distinct roots of p in the (literal) region
  int sign_change_roots = 0;    // roots of the odd-multiplicity part in the region's interior
  Rational sample;              // interior point with p(sample) != 0
  Rational sample_value;
  std::vector<std::pair<Rational, Rational>> boundary_values;  // (endpoint, p(endpoint))
};

/// Certifies claim for p on the region via Sturm counts and sample evaluation.
/// Throws ZeroPolynomial, or ClaimFalseError carrying a witness.
SignCertificate certify_sign_on_region(const Polynomial& p, const Region& region, SignClaim claim);

/// Independently recomputes the evidence in cert for p and checks it implies the claim.
bool recheck(const Polynomial& p, const SignCertificate& cert);

class ClaimFalseError : public Error {
 public:
  ClaimFalseError(const std::string& what, RootBracket witness)
      : Error(ErrorCode::ClaimFalse, what), witness_(std::move(witness)) {}
  /// A rational point where the claim fails (exact bracket), or a bracket
  /// around an irrational root where a strict claim fails.
  const RootBracket& witness() const { return witness_; }

 private:
  RootBracket witness_;
};

}  // namespace lpcert
