#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpcert/elementary.hpp"
#include "lpcert/kernels.hpp"
#include "lpcert/lattice.hpp"
#include "lpcert/radial.hpp"
#include "lpcert/sturm.hpp"

namespace lpcert {

/// 20812 + 756u + 1107u^2 - 216u^3
Polynomial hexagonal_profile_f();
/// (13 - u)(1075 + 220u + 69u^2)
Polynomial hexagonal_profile_g();

/// Decimal thresholds of the planar argument, all exact rationals.
struct Thresholds {
  Rational root_lo = Rational::parse("1.074");          // (4/3)^{1/4} lies in (root_lo, root_hi)
  Rational root_hi = Rational::parse("1.075");
  Rational short_vector = Rational::parse("1.084");     // sign-change radius of f
  Rational nearly_minimal = Rational::parse("1.114");   // upper end of the nearly-minimal window
  Rational gap_end = Rational::parse("1.62");           // upper end of the excluded length gap
  Rational cos_bound = Rational::parse("0.575");
  Rational arc = Rational::parse("0.152");              // separation angle / (2 pi)
  Rational difference_norm = Rational::parse("1.33");   // bound on |x - y|^2
  Rational rescaled_length = Rational::parse("1.467");
  Rational rescaled_norm = Rational::parse("2.16");
  Rational inner_product = Rational::parse("1.243");
  Rational gram_distance = Rational::parse("0.243");
  Rational count_bound = Rational::parse("5.89");
};

struct ProofConfig {
  Rational width = Rational::parse("1e-12");  // target width of transcendental enclosures
  int max_refine = 4;                         // strict-inequality refinement rounds
  int subdivisions = 64;                      // initial u-pieces for the length gap
  int max_subdivisions = 4096;
  Rational rho_max = Rational(12, 47);
  Execution execution = Execution::Serial;
  Thresholds thresholds;
  /// Profiles under test; the proof constructs the expected ones and demands proportionality.
  Polynomial p_f = hexagonal_profile_f();
  Polynomial p_g = hexagonal_profile_g();
};

enum class Verdict { Verified, Falsified, Inconclusive };
std::string verdict_name(Verdict v);
Verdict verdict_from(Decision d);

/// One machine-checked (or recorded) statement inside a step.
struct Claim {
  enum class Kind {
    Exact,    // lhs == rhs as rationals (point enclosures)
    Less,     // lhs < rhs, decided on enclosures
    AtMost,   // lhs <= rhs as rationals (point enclosures)
    Sign,     // sign certificate for `polynomial` on a region
    Logical,  // deduction from premises; verified iff the premises are
  };

  std::string id;
  Kind kind = Kind::Logical;
  std::string statement;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Interval> lhs;
  std::optional<Interval> rhs;
  std::optional<Polynomial> polynomial;
  std::optional<SignCertificate> sign;
  std::vector<std::string> premises;
  std::string note;
};

std::string claim_kind_name(Claim::Kind k);

struct StepRecord {
  std::string name;
  std::string lemma;  // the proposition this step certifies
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Claim> claims;
  Verdict verdict = Verdict::Inconclusive;
  std::string failure;  // first failing claim, if any

  /// Verdict from the claims: first non-verified claim decides.
  void finalize();
};

struct ProofReport {
  std::vector<StepRecord> steps;
  Verdict verdict = Verdict::Inconclusive;
  bool proved() const { return verdict == Verdict::Verified && steps.size() == 8; }
};

std::string overall_name(const ProofReport& report);  // "proved" | "falsified" | "inconclusive"

/// Which sign conditions to certify for a radial certificate.
struct SignConditionSpec {
  std::string label;                 // "f" or "g"
  bool require_equal_at_origin = false;
  bool strict_negativity = true;     // p < 0 (else p <= 0) beyond the radius
  /// Norm window [lo^2, hi^2] on which u -> p(u) e^{-u/2} must decrease, as radii.
  std::optional<std::pair<Interval, Interval>> decreasing_radii;
};

struct Certificates {
  RadialCertificate f;
  RadialCertificate g;
};

/// Constructs p_f and p_g from their defining constraints and checks the supplied
/// profiles are proportional to them. Returns the supplied certificates.
StepRecord construct_certificates(const ProofConfig& config, std::optional<Certificates>& out);

StepRecord verify_sign_conditions(const RadialCertificate& cert, const SignConditionSpec& spec,
                                  const ProofConfig& config);
SignConditionSpec sign_spec_f(const ProofConfig& config);
SignConditionSpec sign_spec_g(const ProofConfig& config);

/// Throws Precondition when the certificate carries no sign-change radius.
StepRecord lemma_short_vector(const RadialCertificate& cert_f, const ProofConfig& config);
StepRecord lemma_at_most_six(const ProofConfig& config);
/// Window of lengths excluded by f; defaults to [nearly_minimal, gap_end].
StepRecord lemma_length_gap(const RadialCertificate& cert_f, const ProofConfig& config,
                            std::optional<std::pair<Rational, Rational>> window = std::nullopt);
StepRecord lemma_at_least_six(const RadialCertificate& cert_g, const ProofConfig& config);
StepRecord geometry_argument(const ProofConfig& config);
/// Throws Precondition unless 0 < rho_max <= 12/47.
StepRecord local_optimality_certificate(const Rational& rho_max, const ProofConfig& config);

/// ((2+a, 1+b), (1+b, 2+c)).
struct PerturbedGram {
  Rational a;
  Rational b;
  Rational c;

  Rational rho() const;
  GramMatrix matrix() const;
  Rational determinant() const;  // 3 + 2(a+c-b) + (ac-b^2)
  Rational minimal_norm(const EnumerationOptions& options = {}) const;
  /// Gram proportional to ((2,1),(1,2)).
  bool proportional_to_hexagonal() const;
};

/// (pi/4) M_rho / sqrt(D_rho). Throws NotPositiveDefinite.
Interval perturbed_density(const Rational& a, const Rational& b, const Rational& c, const Rational& width);
/// pi / sqrt(12)
Interval hexagonal_density(const Rational& width);

/// Runs the eight steps in order, stopping at the first step that is not verified.
ProofReport prove_hexagonal_optimal(const ProofConfig& config = {});

struct ReplayResult {
  bool consistent = true;
  std::vector<std::string> mismatches;
};

/// Recomputes the proof and checks every stored verdict, exact value, enclosure
/// (fresh and stored enclosures must intersect) and sign certificate.
ReplayResult replay(const ProofReport& report, const ProofConfig& config = {});

}  // namespace lpcert
