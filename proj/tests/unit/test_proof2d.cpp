#include <random>

#include "doctest.h"
#include "lpcert/error.hpp"
#include "lpcert/json_io.hpp"
#include "lpcert/proof2d.hpp"

using namespace lpcert;

namespace {

const Rational kWidth = Rational::parse("1e-12");

const Claim& find_claim(const ProofReport& report, const std::string& step, const std::string& id) {
  for (const auto& s : report.steps) {
    if (s.name != step) continue;
    for (const auto& c : s.claims) {
      if (c.id == id) return c;
    }
  }
  throw std::runtime_error("no claim " + step + "/" + id);
}

const ProofReport& default_report() {
  static const ProofReport report = prove_hexagonal_optimal();
  return report;
}

}  // namespace

TEST_CASE("the default run proves optimality in eight verified steps") {
  const ProofReport& r = default_report();
  CHECK(r.proved());
  CHECK(overall_name(r) == "proved");
  REQUIRE(r.steps.size() == 8);
  const std::vector<std::string> names{"construct_certificates", "verify_sign_conditions", "lemma_short_vector",
                                       "lemma_at_most_six",      "lemma_length_gap",       "lemma_at_least_six",
                                       "geometry_argument",      "local_optimality_certificate"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(r.steps[i].name == names[i]);
    CHECK(r.steps[i].verdict == Verdict::Verified);
    for (const auto& c : r.steps[i].claims) CHECK_MESSAGE(c.verdict == Verdict::Verified, c.id);
  }
}

TEST_CASE("exact milestones hold with zero tolerance") {
  const ProofReport& r = default_report();
  const Claim& origin = find_claim(r, "verify_sign_conditions", "f.equal_at_origin");
  CHECK(*origin.lhs == Interval(Rational(20812)));
  CHECK(*origin.rhs == Interval(Rational(20812)));
  const Claim& excess = find_claim(r, "lemma_at_least_six", "transform_excess_positive");
  CHECK(*excess.rhs == Interval(Rational(5674)));
  const Claim& gap = find_claim(r, "geometry_argument", "distance_below_radius");
  CHECK(*gap.lhs == Interval(Rational::parse("0.243")));
  CHECK(*gap.rhs == Interval(Rational(12, 47)));
  const Claim& arcs = find_claim(r, "lemma_at_most_six", "seven_arcs_overflow");
  CHECK(*arcs.rhs == Interval(Rational::parse("1.064")));
  const Claim& bound_a = find_claim(r, "local_optimality_certificate", "bound_A_at_rho_max");
  CHECK(*bound_a.lhs == Interval(Rational(4, 7)));
  const Claim& bound_b = find_claim(r, "local_optimality_certificate", "bound_B_at_rho_max");
  CHECK(*bound_b.lhs == Interval(Rational(24, 35)));
  CHECK(Rational(5) * Rational(12, 47) / (Rational(3) - Rational(36, 47)) == Rational(4, 7));
}

TEST_CASE("interval milestones at width 1e-4") {
  const ProofReport& r = default_report();
  const Rational tol = Rational::parse("1e-4");
  const Claim& above = find_claim(r, "lemma_short_vector", "min_length_above");
  const Claim& below = find_claim(r, "lemma_short_vector", "min_length_below");
  CHECK(above.rhs->width() <= tol);
  CHECK(Rational::parse("1.074") < above.rhs->lo());
  CHECK(below.lhs->hi() < Rational::parse("1.075"));
  const Claim& quotient = find_claim(r, "lemma_at_least_six", "count_quotient");
  CHECK(quotient.rhs->width() <= tol);
  CHECK(quotient.rhs->lo() > Rational::parse("5.89"));
  CHECK(quotient.rhs->contains(Rational::parse("5.8952489801445098695")));  // oracle
  const Claim& cosine = find_claim(r, "lemma_at_most_six", "cos_of_arc");
  CHECK(cosine.rhs->width() <= tol);
  CHECK(cosine.rhs->lo() > Rational::parse("0.575"));
}

TEST_CASE("the length-gap enclosure contains the oracle maximum") {
  const ProofReport& r = default_report();
  const Claim& gap = find_claim(r, "lemma_length_gap", "f_below_threshold");
  // mpmath (4001-point scan): max of p_f(u) e^{-u/2} on the window is about -166.5508;
  // threshold -3 f((4/3)^{1/4}) = -165.62305326677482189...
  CHECK(gap.lhs->hi() >= Rational::parse("-166.5509"));
  CHECK(gap.lhs->hi() < gap.rhs->lo());
  CHECK(gap.rhs->contains(Rational::parse("-165.623053266774821895")));
}

TEST_CASE("every +-1 coefficient mutant of p_f or p_g fails to prove") {
  int mutants = 0;
  for (int which = 0; which < 2; ++which) {
    for (int k = 0; k < 4; ++k) {
      for (int delta : {-1, 1}) {
        ProofConfig config;
        Polynomial& target = which == 0 ? config.p_f : config.p_g;
        std::vector<Rational> cs = target.coefficients();
        cs[static_cast<std::size_t>(k)] += Rational(delta);
        target = Polynomial(cs);
        const ProofReport r = prove_hexagonal_optimal(config);
        CHECK_FALSE(r.proved());
        CHECK(r.verdict != Verdict::Verified);
        ++mutants;
      }
    }
  }
  CHECK(mutants == 16);
}

TEST_CASE("sign conditions catch a mutated linear coefficient but not a mutated constant term") {
  ProofConfig config;
  // Adding e^{-pi r^2} changes f(0) and f_hat(0) alike, so only the construction step rejects it.
  const RadialCertificate constant(2, Polynomial{20813, 756, 1107, -216}, config.thresholds.short_vector);
  CHECK(verify_sign_conditions(constant, sign_spec_f(config), config).verdict == Verdict::Verified);
  const RadialCertificate linear(2, Polynomial{20812, 757, 1107, -216}, config.thresholds.short_vector);
  const StepRecord step = verify_sign_conditions(linear, sign_spec_f(config), config);
  CHECK(step.verdict == Verdict::Falsified);
  CHECK(step.failure == "equal_at_origin");
}

TEST_CASE("rescaled proportional profiles still prove") {
  ProofConfig config;
  config.p_f = Polynomial{20812, 756, 1107, -216} * Rational(3, 2);
  config.p_g = Polynomial{13975, 1785, 677, -69} * Rational(2);
  CHECK(prove_hexagonal_optimal(config).proved());
}

TEST_CASE("local optimality radius guard") {
  ProofConfig config;
  config.rho_max = Rational::parse("0.3");
  CHECK_THROWS_AS(prove_hexagonal_optimal(config), Error);
  CHECK_THROWS_AS(local_optimality_certificate(Rational(0), config), Error);
  CHECK_NOTHROW(local_optimality_certificate(Rational(1, 5), config));
  CHECK(local_optimality_certificate(Rational(12, 47), config).verdict == Verdict::Verified);
}

TEST_CASE("a wider nearly-minimal window breaks the angle bound") {
  ProofConfig config;
  config.thresholds.nearly_minimal = Rational::parse("1.3");
  const StepRecord step = lemma_at_most_six(config);
  CHECK(step.verdict == Verdict::Falsified);
  CHECK(step.failure == "cos_angle_bound");
  // (2 * 1.3^2 - sqrt(4/3)) / (2 sqrt(4/3)) = 0.96358293239570131303...
  CHECK(step.claims.front().lhs->contains(Rational::parse("0.9635829323957013130")));
}

TEST_CASE("length gap on other windows") {
  ProofConfig config;
  const RadialCertificate f(2, config.p_f, config.thresholds.short_vector);
  const auto point = lemma_length_gap(f, config, std::make_pair(Rational::parse("1.62"), Rational::parse("1.62")));
  CHECK(point.verdict == Verdict::Verified);
  // f is large near length 1, so the gap claim is false there.
  const auto low = lemma_length_gap(f, config, std::make_pair(Rational(1), Rational::parse("1.62")));
  CHECK(low.verdict == Verdict::Falsified);
  CHECK_THROWS_AS(lemma_length_gap(f, config, std::make_pair(Rational(2), Rational(1))), Error);
}

TEST_CASE("steps requiring a radius refuse certificates without one") {
  ProofConfig config;
  const RadialCertificate bare(2, config.p_f);
  CHECK_THROWS_AS(lemma_short_vector(bare, config), Error);
  CHECK_THROWS_AS(verify_sign_conditions(bare, sign_spec_f(config), config), Error);
}

TEST_CASE("perturbed densities at the documented points") {
  // pi / sqrt 12 = 0.906899682117108925297...
  CHECK(hexagonal_density(kWidth).contains(Rational::parse("0.906899682117108925297")));
  const PerturbedGram q{Rational(1, 10), Rational(0), Rational(0)};
  CHECK(q.minimal_norm() == Rational(2));
  CHECK(q.determinant() == Rational(16, 5));
  // (pi/4) 2 / sqrt(3.2) = 0.87810184138009079914...
  CHECK(perturbed_density(Rational(1, 10), 0, 0, kWidth).contains(Rational::parse("0.878101841380090799144")));
  const Rational eps(1, 10);
  const PerturbedGram scaled{Rational(2) * eps, eps, Rational(2) * eps};
  CHECK(scaled.proportional_to_hexagonal());
  CHECK(perturbed_density(scaled.a, scaled.b, scaled.c, kWidth).intersects(hexagonal_density(kWidth)));
  CHECK_THROWS_AS(perturbed_density(Rational(-2), 0, 0, kWidth), Error);
}

TEST_CASE("perturbations of size at most 1/5 never beat the hexagonal density (1000 samples)") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> num(-200, 200);
  const Interval hex = hexagonal_density(kWidth);
  int proportional_seen = 0;
  for (int i = 0; i < 1000; ++i) {
    PerturbedGram q;
    if (i % 50 == 0) {
      // exactly proportional sample (2e, e, 2e)
      const Rational e(num(rng) / 2, 1000);
      q = {Rational(2) * e, e, Rational(2) * e};
    } else {
      q = {Rational(num(rng), 1000), Rational(num(rng), 1000), Rational(num(rng), 1000)};
    }
    REQUIRE(q.rho() <= Rational(1, 5));
    const Interval d = perturbed_density(q.a, q.b, q.c, kWidth);
    if (q.proportional_to_hexagonal()) {
      ++proportional_seen;
      CHECK(d.intersects(hex));
    } else {
      INFO(q.a.str(), " ", q.b.str(), " ", q.c.str());
      CHECK(d.hi() < hex.lo());
    }
  }
  CHECK(proportional_seen >= 20);
}

TEST_CASE("refining precision never turns a verified step into a falsified one") {
  for (const char* w : {"1e-8", "1e-12", "1e-20", "1e-30"}) {
    ProofConfig config;
    config.width = Rational::parse(w);
    const ProofReport r = prove_hexagonal_optimal(config);
    for (const auto& s : r.steps) CHECK(s.verdict != Verdict::Falsified);
    CHECK(r.proved());
  }
}

TEST_CASE("serial and parallel runs produce identical reports") {
  ProofConfig serial, parallel;
  parallel.execution = Execution::Parallel;
  const auto a = json_io::to_json(prove_hexagonal_optimal(serial)).dump();
  const auto b = json_io::to_json(prove_hexagonal_optimal(parallel)).dump();
  CHECK(a == b);
}

TEST_CASE("replaying a report reproduces it") {
  const ReplayResult ok = replay(default_report());
  CHECK(ok.consistent);
  CHECK(ok.mismatches.empty());
}

TEST_CASE("replay detects tampered enclosures, verdicts and sign certificates") {
  ProofReport tampered = default_report();
  for (auto& c : tampered.steps[5].claims) {
    if (c.id == "count_quotient") c.rhs = Interval(Rational(7), Rational(8));
  }
  CHECK_FALSE(replay(tampered).consistent);

  ProofReport flipped = default_report();
  flipped.steps[3].claims[0].verdict = Verdict::Falsified;
  CHECK_FALSE(replay(flipped).consistent);

  ProofReport forged = default_report();
  for (auto& s : forged.steps) {
    for (auto& c : s.claims) {
      if (c.sign) c.polynomial = -*c.polynomial;
    }
  }
  const ReplayResult r = replay(forged);
  CHECK_FALSE(r.consistent);
  CHECK(r.mismatches.size() >= 5);
}

TEST_CASE("the constrained case analysis covers the documented instance") {
  // (a, b, c) = (rho, rho, 0): {a, c, -b} = {rho, 0, -rho}, and -rho <= -rho/2.
  const StepRecord s = local_optimality_certificate(Rational(12, 47), ProofConfig{});
  CHECK(s.claims.front().id == "constrained_case_analysis");
  CHECK(*s.claims.front().lhs == Interval(Rational(-1, 2)));
  const Rational rho(1, 5);
  CHECK(std::min({rho, Rational(0), -rho}) <= -rho / Rational(2));
}

TEST_CASE("the transcript names every step") {
  const std::string text = json_io::transcript(default_report());
  for (const auto& s : default_report().steps) CHECK(text.find(s.name) != std::string::npos);
  CHECK(text.find("Result: proved") != std::string::npos);
}
