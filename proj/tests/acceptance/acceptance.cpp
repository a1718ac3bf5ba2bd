// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lpcert/cli.hpp"
#include "lpcert/elementary.hpp"
#include "lpcert/json_io.hpp"
#include "lpcert/lattice.hpp"
#include "lpcert/poisson.hpp"
#include "lpcert/proof2d.hpp"
#include "lpcert/radial.hpp"

using namespace lpcert;

namespace {

const Polynomial kPf{20812, 756, 1107, -216};
const Polynomial kPg{13975, 1785, 677, -69};
const Rational kWidth = Rational::parse("1e-12");

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const Claim* find_claim(const ProofReport& r, const std::string& step, const std::string& id) {
  for (const auto& s : r.steps) {
    if (s.name != step) continue;
    for (const auto& c : s.claims) {
      if (c.id == id) return &c;
    }
  }
  return nullptr;
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> cs;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) cs.push_back(Rational(num(rng)) / Rational(den(rng)));
  return Polynomial(cs);
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Polynomial fh = fourier_transform_polynomial(kPf, 2);
  const Polynomial gh = fourier_transform_polynomial(kPg, 2);
  const double t = seconds_since(t0);
  o.require(fh == Polynomial{20812, 5940, -2781, 216}, "p_f transform coefficients");
  o.require(fh == Polynomial{43, 24} * Polynomial{-22, 3} * Polynomial{-22, 3}, "(43+24u)(-22+3u)^2");
  o.require(gh == Polynomial{401, 69} * Polynomial{-7, 1} * Polynomial{-7, 1}, "(401+69u)(u-7)^2");
  o.require(t < 1.0, "runtime");
  o.detail << " f_hat = " << fh.str() << ", g_hat = " << gh.str() << ", " << t << " s";
}

void criterion2(Outcome& o) {
  const std::vector<Constraint> cs{Constraint::transform_root(Rational(22, 3), 2), Constraint::equal_at_origin()};
  const RadialCertificate c = construct_certificate(2, 3, cs);
  o.require(proportional(c.p(), kPf), "proportional to p_f");
  o.detail << " constructed p = " << c.p().str();
}

void criterion3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = cli::run_command({"prove-hexagonal", "--format", "json"});
  const double t = seconds_since(t0);
  const auto j = json_io::Json::parse(result.output);
  o.require(result.exit_code == 0, "exit code 0");
  o.require(j["result"] == "proved", "result proved");
  o.require(j["steps"].size() == 8, "8 steps");
  for (const auto& s : j["steps"]) o.require(s["verdict"] == "verified", "step verified");
  o.require(t < 60.0, "under 60 s");
  int caught = 0, mutants = 0;
  for (int which = 0; which < 2; ++which) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (int delta : {-1, 1}) {
        ProofConfig config;
        Polynomial& p = which == 0 ? config.p_f : config.p_g;
        auto cs = p.coefficients();
        cs[k] += Rational(delta);
        p = Polynomial(cs);
        const ProofReport r = prove_hexagonal_optimal(config);
        ++mutants;
        if (r.verdict == Verdict::Falsified || r.verdict == Verdict::Inconclusive) ++caught;
      }
    }
  }
  o.require(mutants >= 8 && caught == mutants, "all mutants rejected");
  o.detail << " proved in " << t << " s; " << caught << "/" << mutants << " coefficient mutants rejected";
}

void criterion4(Outcome& o, const ProofReport& r) {
  const Claim* origin = find_claim(r, "verify_sign_conditions", "f.equal_at_origin");
  o.require(origin && origin->verdict == Verdict::Verified && *origin->lhs == Interval(Rational(20812)) &&
                *origin->rhs == Interval(Rational(20812)),
            "p_f(0) = p_f_hat(0) = 20812");
  const Claim* excess = find_claim(r, "lemma_at_least_six", "transform_excess_positive");
  o.require(excess && *excess->rhs == Interval(Rational(5674)), "g_hat(0) - g(0) = 5674");
  o.require(RadialCertificate(2, kPg).transform_at_origin() - kPg.coefficient(0) == Rational(5674), "5674 direct");
  const Claim* radius = find_claim(r, "geometry_argument", "distance_below_radius");
  o.require(radius && radius->verdict == Verdict::Verified && Rational::parse("0.243") < Rational(12, 47),
            "0.243 < 12/47");
  const Claim* arcs = find_claim(r, "lemma_at_most_six", "seven_arcs_overflow");
  o.require(arcs && arcs->verdict == Verdict::Verified && *arcs->rhs == Interval(Rational::parse("1.064")),
            "7 * 0.152 = 1.064 > 1");
  const Claim* bound_a = find_claim(r, "local_optimality_certificate", "bound_A_at_rho_max");
  o.require(bound_a && *bound_a->lhs == Interval(Rational(4, 7)), "5(12/47)/(3-36/47) = 4/7");
  o.require(Rational(5) * Rational(12, 47) / (Rational(3) - Rational(36, 47)) == Rational(4, 7), "4/7 direct");
  o.detail << " 20812 = 20812, 5674, 0.243 < 12/47, 1.064 > 1, 4/7";
}

void criterion5(Outcome& o, const ProofReport& r) {
  const Rational tol = Rational::parse("1e-4");
  const Claim* above = find_claim(r, "lemma_short_vector", "min_length_above");
  const Claim* below = find_claim(r, "lemma_short_vector", "min_length_below");
  o.require(above && below, "claims present");
  if (!above || !below) return;
  const Interval& root = *above->rhs;
  o.require(root.width() <= tol && Rational::parse("1.074") < root.lo() && below->lhs->hi() < Rational::parse("1.075"),
            "(4/3)^{1/4} in (1.074, 1.075)");
  const Claim* quotient = find_claim(r, "lemma_at_least_six", "count_quotient");
  o.require(quotient && quotient->rhs->width() <= tol && quotient->rhs->lo() > Rational::parse("5.89"),
            "quotient > 5.89");
  const Claim* cosine = find_claim(r, "lemma_at_most_six", "cos_of_arc");
  o.require(cosine && cosine->rhs->width() <= tol && cosine->rhs->lo() > Rational::parse("0.575"),
            "cos(2 pi 0.152) > 0.575");
  if (quotient && cosine) {
    o.detail << " (4/3)^{1/4} in " << root.decimal(10) << ", quotient in " << quotient->rhs->decimal(10)
             << ", cos in " << cosine->rhs->decimal(10);
  }
}

void criterion6(Outcome& o) {
  const RadialCertificate f(2, kPf, Rational::parse("1.084"));
  const Interval bound = lp_density_bound(f, verify_lp_conditions(f, kWidth), kWidth);
  const Interval target = enclose_pi(kWidth) * Interval(Rational::parse("0.542") * Rational::parse("0.542"));
  const Rational tol = Rational::parse("1e-3");
  o.require(bound.hi() - target.lo() <= tol && target.hi() - bound.lo() <= tol, "within 1e-3 of pi 0.542^2");
  const Interval hex = hexagonal_density(kWidth);
  o.require(hex.hi() < bound.lo(), "bound above hexagonal density");
  o.detail << " bound " << bound.decimal(10) << " vs hexagonal " << hex.decimal(10);
}

void criterion7(Outcome& o) {
  const Rational tol = Rational::parse("1e-6");
  const auto z2 = poisson_identity_check(GramMatrix::parse("1,0;0,1"), RadialCertificate(2, Polynomial{1}),
                                         Rational(6), tol);
  const auto hex = poisson_identity_check(GramMatrix::parse("2,1;1,2"), RadialCertificate(2, kPf), Rational(6), tol);
  PoissonOptions corrupt;
  corrupt.transform_override = Polynomial{20812, 5940, -2781, 217};
  const auto bad =
      poisson_identity_check(GramMatrix::parse("2,1;1,2"), RadialCertificate(2, kPf), Rational(6), tol, corrupt);
  o.require(z2.verdict == PoissonVerdict::Consistent, "Z^2 consistent");
  o.require(hex.verdict == PoissonVerdict::Consistent, "hexagonal consistent");
  for (const auto* rep : {&z2, &hex}) {
    o.require(rep->lhs_tail_bound < tol && rep->rhs_tail_bound < tol, "tail bounds < 1e-6");
  }
  o.require(bad.verdict == PoissonVerdict::Violated, "corrupted transform violated");
  o.detail << " Z^2: " << poisson_verdict_name(z2.verdict) << ", hexagonal: " << poisson_verdict_name(hex.verdict)
           << " (tails " << hex.lhs_tail_bound.value().get_d() << ", " << hex.rhs_tail_bound.value().get_d()
           << "), corrupted: " << poisson_verdict_name(bad.verdict);
}

void criterion8(Outcome& o) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> diag(1, 20), off(-20, 20);
  int matched = 0;
  for (int trial = 0; trial < 200; ++trial) {
    long a, b, c;
    do {
      a = diag(rng);
      b = off(rng);
      c = diag(rng);
    } while (a * c - b * b <= 0);
    const long det = a * c - b * b;
    Rational bound(std::max(a, c) + static_cast<long>(rng() % 40));
    bound = std::min(bound, Rational(625 * det, std::max(a, c)));  // keeps |s|, |t| <= 25
    const auto report = enumerate_vectors_below(GramMatrix::exact({{Rational(a), Rational(b)}, {Rational(b), Rational(c)}}), bound);
    std::vector<std::pair<IntVector, Rational>> brute;
    for (long s = -25; s <= 25; ++s) {
      for (long t = -25; t <= 25; ++t) {
        const Rational n(a * s * s + 2 * b * s * t + c * t * t);
        if ((s != 0 || t != 0) && n <= bound) brute.push_back({{s, t}, n});
      }
    }
    std::sort(brute.begin(), brute.end());
    bool same = report.vectors.size() == brute.size();
    for (std::size_t i = 0; same && i < brute.size(); ++i) {
      same = report.vectors[i].coords == brute[i].first && report.vectors[i].norm == Interval(brute[i].second);
    }
    if (same) ++matched;
  }
  o.require(matched == 200, "all 200 Grams match brute force");
  const auto hex = enumerate_vectors_below(GramMatrix::parse("2,1;1,2"), Rational(2));
  bool six = hex.vectors.size() == 6;
  for (const auto& v : hex.vectors) six = six && v.norm == Interval(Rational(2));
  o.require(six, "hexagonal: exactly 6 vectors of norm 2");
  o.detail << " " << matched << "/200 Grams match; hexagonal minimal vectors: " << hex.vectors.size();
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(9);
  int involution = 0, linear = 0;
  for (int n : {1, 2, 3, 8, 24}) {
    for (int i = 0; i < 100; ++i) {
      const Polynomial p = random_polynomial(rng, 5);
      const Polynomial q = random_polynomial(rng, 5);
      if (fourier_transform_polynomial(fourier_transform_polynomial(p, n), n) == p) ++involution;
      const Rational s(static_cast<long>(rng() % 19) - 9, 7);
      if (fourier_transform_polynomial(p + q * s, n) ==
          fourier_transform_polynomial(p, n) + fourier_transform_polynomial(q, n) * s) {
        ++linear;
      }
    }
  }
  o.require(involution == 500 && linear == 500, "Fourier involution and linearity");

  std::uniform_int_distribution<long> num(-2000, 2000);
  int contained = 0;
  for (int i = 0; i < 10000; ++i) {
    const Rational lo(num(rng), 97);
    const Rational hi = lo + Rational(std::abs(num(rng)), 301);
    const Rational x = lo + (hi - lo) * Rational(static_cast<long>(rng() % 33), 32);
    const Interval X(lo, hi);
    const Interval ex = enclose_exp(Interval(x) / Interval(Rational(4)), kWidth);  // keep exponents moderate
    const Interval eX = enclose_exp(X / Interval(Rational(4)), kWidth);
    const bool ok = (X * X).contains(x * x) && (X - X).contains(Rational(0)) && eX.lo() <= ex.hi() &&
                    ex.lo() <= eX.hi() && evaluate(kPf, X).contains(kPf(x));
    if (ok) ++contained;
  }
  o.require(contained == 10000, "interval containment");

  const Interval hex = hexagonal_density(kWidth);
  std::uniform_int_distribution<long> pert(-200, 200);
  int holds = 0;
  for (int i = 0; i < 1000; ++i) {
    PerturbedGram q{Rational(pert(rng), 1000), Rational(pert(rng), 1000), Rational(pert(rng), 1000)};
    if (i % 100 == 0) {
      const Rational e(pert(rng) / 2, 1000);
      q = {Rational(2) * e, e, Rational(2) * e};
    }
    const Interval d = perturbed_density(q.a, q.b, q.c, kWidth);
    if (q.proportional_to_hexagonal() ? d.intersects(hex) : d.hi() < hex.lo()) ++holds;
  }
  o.require(holds == 1000, "perturbed density property");
  o.detail << " involution " << involution << "/500, linearity " << linear << "/500, containment " << contained
           << "/10000, perturbed density " << holds << "/1000";
}

}  // namespace

int main() {
  const ProofReport report = prove_hexagonal_optimal();
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"transform exactness", criterion1},
      {"construction uniqueness", criterion2},
      {"full proof run and mutation suite", criterion3},
      {"exact numeric milestones", [&](Outcome& o) { criterion4(o, report); }},
      {"interval milestones", [&](Outcome& o) { criterion5(o, report); }},
      {"LP bound sanity", criterion6},
      {"Poisson self-test", criterion7},
      {"enumeration oracle", criterion8},
      {"property suites", criterion9},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index++ << " (" << name << "):" << o.detail.str()
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}
