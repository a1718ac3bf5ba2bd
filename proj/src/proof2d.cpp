#include "lpcert/proof2d.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "lpcert/error.hpp"

namespace lpcert {

namespace {

long bits_of(const Rational& width) { return bits_for_width(width) + 6; }

Interval sqrt_of(const Rational& x, const Rational& width) { return sqrt(Interval(x), bits_of(width)); }
Interval fourth_root_of(const Rational& x, const Rational& width) {
  return sqrt(sqrt_of(x, width / Rational(8)), bits_of(width));
}
// (4/3)^{1/2}: the squared minimal-length lower bound after normalizing the covolume to 1.
Interval min_norm_bound(const Rational& width) { return sqrt_of(Rational(4, 3), width); }
Interval min_length_bound(const Rational& width) { return fourth_root_of(Rational(4, 3), width); }
Interval two_pi_times(const Rational& x, const Rational& width) {
  return Interval(Rational(2) * x) * enclose_pi(width / (Rational(2) * (abs(x) + Rational(1))));
}

Interval point(const Rational& x) { return Interval(x); }

Claim exact_claim(std::string id, std::string statement, const Rational& lhs, const Rational& rhs) {
  Claim c;
  c.id = std::move(id);
  c.kind = Claim::Kind::Exact;
  c.statement = std::move(statement);
  c.lhs = point(lhs);
  c.rhs = point(rhs);
  c.verdict = lhs == rhs ? Verdict::Verified : Verdict::Falsified;
  return c;
}

Claim rational_less(std::string id, std::string statement, const Rational& lhs, const Rational& rhs) {
  Claim c;
  c.id = std::move(id);
  c.kind = Claim::Kind::Less;
  c.statement = std::move(statement);
  c.lhs = point(lhs);
  c.rhs = point(rhs);
  c.verdict = lhs < rhs ? Verdict::Verified : Verdict::Falsified;
  return c;
}

Claim rational_at_most(std::string id, std::string statement, const Rational& lhs, const Rational& rhs) {
  Claim c;
  c.id = std::move(id);
  c.kind = Claim::Kind::AtMost;
  c.statement = std::move(statement);
  c.lhs = point(lhs);
  c.rhs = point(rhs);
  c.verdict = lhs <= rhs ? Verdict::Verified : Verdict::Falsified;
  return c;
}

Claim enclosure_less(std::string id, std::string statement, const Enclosure& lhs, const Enclosure& rhs,
                     const ProofConfig& config) {
  Claim c;
  c.id = std::move(id);
  c.kind = Claim::Kind::Less;
  c.statement = std::move(statement);
  try {
    const StrictComparison cmp = certify_less(lhs, rhs, config.width, config.max_refine);
    c.lhs = cmp.lhs;
    c.rhs = cmp.rhs;
    c.verdict = verdict_from(cmp.decision);
    c.note = "enclosure width target " + cmp.width_used.decimal(20);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PrecisionUnreachable) throw;
    c.verdict = Verdict::Inconclusive;
    c.note = e.what();
  }
  return c;
}

Claim sign_claim(std::string id, std::string statement, const Polynomial& p, const Region& region, SignClaim claim) {
  Claim c;
  c.id = std::move(id);
  c.kind = Claim::Kind::Sign;
  c.statement = std::move(statement);
  c.polynomial = p;
  try {
    c.sign = certify_sign_on_region(p, region, claim);
    c.verdict = Verdict::Verified;
  } catch (const ClaimFalseError& e) {
    c.verdict = Verdict::Falsified;
    const auto& w = e.witness();
    c.note = w.exact() ? "fails at u = " + w.lo.str() : "fails at a root in [" + w.lo.str() + ", " + w.hi.str() + "]";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroPolynomial) throw;
    c.verdict = Verdict::Falsified;
    c.note = e.what();
  }
  return c;
}

Claim logical_claim(std::string id, std::string statement, std::vector<std::string> premises) {
  Claim c;
  c.id = std::move(id);
  c.kind = Claim::Kind::Logical;
  c.statement = std::move(statement);
  c.premises = std::move(premises);
  return c;
}

std::string prior_step(const std::string& name) { return "step:" + name; }

void require_radius(const RadialCertificate& cert) {
  if (!cert.sign_change_radius()) throw Error(ErrorCode::Precondition, "certificate has no sign-change radius");
}

}  // namespace

Polynomial hexagonal_profile_f() { return Polynomial{20812, 756, 1107, -216}; }

Polynomial hexagonal_profile_g() { return Polynomial{13, -1} * Polynomial{1075, 220, 69}; }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Falsified: return "falsified";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "";
}

Verdict verdict_from(Decision d) {
  switch (d) {
    case Decision::True: return Verdict::Verified;
    case Decision::False: return Verdict::Falsified;
    case Decision::Inconclusive: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

std::string claim_kind_name(Claim::Kind k) {
  switch (k) {
    case Claim::Kind::Exact: return "exact";
    case Claim::Kind::Less: return "less";
    case Claim::Kind::AtMost: return "at_most";
    case Claim::Kind::Sign: return "sign";
    case Claim::Kind::Logical: return "logical";
  }
  return "";
}

void StepRecord::finalize() {
  std::map<std::string, Verdict> known;
  for (auto& c : claims) {
    if (c.kind == Claim::Kind::Logical) {
      // Prior-step premises are established by the pipeline order; local ones are looked up.
      c.verdict = Verdict::Verified;
      for (const auto& p : c.premises) {
        if (p.rfind("step:", 0) == 0) continue;
        const auto it = known.find(p);
        const Verdict v = it == known.end() ? Verdict::Inconclusive : it->second;
        if (v != Verdict::Verified) {
          c.verdict = v;
          break;
        }
      }
    }
    known[c.id] = c.verdict;
  }
  verdict = Verdict::Verified;
  failure.clear();
  for (const auto& c : claims) {
    if (c.verdict != Verdict::Verified) {
      verdict = c.verdict;
      failure = c.id;
      return;
    }
  }
}

std::string overall_name(const ProofReport& report) {
  if (report.proved()) return "proved";
  return report.verdict == Verdict::Falsified ? "falsified" : "inconclusive";
}

// ---- Step 1 ------------------------------------------------------------------------------

StepRecord construct_certificates(const ProofConfig& config, std::optional<Certificates>& out) {
  StepRecord s;
  s.name = "construct_certificates";
  s.lemma = "p_f and p_g are determined up to scale by linear constraints on f, f_hat";
  const std::vector<Constraint> cf{Constraint::transform_root(Rational(22, 3), 2), Constraint::equal_at_origin()};
  const std::vector<Constraint> cg{Constraint::transform_root(Rational(7), 2), Constraint::profile_root(Rational(13))};
  auto join = [](const std::vector<Constraint>& cs) {
    std::string t;
    for (const auto& c : cs) t += (t.empty() ? "" : ", ") + c.str();
    return t;
  };
  s.inputs = {{"dimension", "2"},
              {"degree", "3"},
              {"f_constraints", join(cf)},
              {"g_constraints", join(cg)},
              {"p_f", config.p_f.str()},
              {"p_g", config.p_g.str()}};

  const RadialCertificate built_f = construct_certificate(2, 3, cf);
  const RadialCertificate built_g = construct_certificate(2, 3, cg);
  s.inputs.emplace_back("constructed_p_f", built_f.p().str());
  s.inputs.emplace_back("constructed_p_g", built_g.p().str());

  Claim pf = logical_claim("p_f_proportional", "supplied p_f is a nonzero multiple of the constructed solution", {});
  pf.kind = Claim::Kind::Exact;
  pf.polynomial = built_f.p();
  pf.verdict = proportional(config.p_f, built_f.p()) ? Verdict::Verified : Verdict::Falsified;
  s.claims.push_back(pf);

  Claim pg = logical_claim("p_g_proportional", "supplied p_g is a nonzero multiple of the constructed solution", {});
  pg.kind = Claim::Kind::Exact;
  pg.polynomial = built_g.p();
  pg.verdict = proportional(config.p_g, built_g.p()) ? Verdict::Verified : Verdict::Falsified;
  s.claims.push_back(pg);

  out = Certificates{RadialCertificate(2, config.p_f, config.thresholds.short_vector),
                     RadialCertificate(2, config.p_g, config.thresholds.gap_end)};
  s.inputs.emplace_back("p_hat_f", out->f.p_hat().str());
  s.inputs.emplace_back("p_hat_g", out->g.p_hat().str());
  s.finalize();
  return s;
}

// ---- Step 2 ------------------------------------------------------------------------------

SignConditionSpec sign_spec_f(const ProofConfig& config) {
  SignConditionSpec spec;
  spec.label = "f";
  spec.require_equal_at_origin = true;
  spec.strict_negativity = true;
  spec.decreasing_radii = std::make_pair(Interval(Rational(0)), Interval(config.thresholds.short_vector));
  return spec;
}

SignConditionSpec sign_spec_g(const ProofConfig& config) {
  SignConditionSpec spec;
  spec.label = "g";
  spec.require_equal_at_origin = false;
  spec.strict_negativity = false;
  spec.decreasing_radii =
      std::make_pair(min_length_bound(config.width), Interval(config.thresholds.nearly_minimal));
  return spec;
}

StepRecord verify_sign_conditions(const RadialCertificate& cert, const SignConditionSpec& spec,
                                  const ProofConfig& config) {
  require_radius(cert);
  const Rational r = *cert.sign_change_radius();
  StepRecord s;
  s.name = "verify_sign_conditions[" + spec.label + "]";
  s.lemma = spec.label + " <= 0 beyond radius " + r.decimal(6) + ", " + spec.label + "_hat >= 0" +
            (spec.require_equal_at_origin ? ", " + spec.label + "(0) = " + spec.label + "_hat(0)" : "");
  s.inputs = {{"p", cert.p().str()}, {"p_hat", cert.p_hat().str()}, {"sign_change_radius", r.str()}};

  const Rational v0 = cert.normalization();
  const Rational t0 = cert.transform_at_origin();
  if (spec.require_equal_at_origin) {
    s.claims.push_back(exact_claim("equal_at_origin", "p(0) = p_hat(0)", v0, t0));
  }
  s.claims.push_back(rational_less("transform_positive_at_origin", "0 < p_hat(0)", Rational(0), t0));

  // The ray starts at a certified lower bound of 2 pi r^2, so it covers every |x| >= r.
  const Rational u0 = u_of_norm(Interval(r * r), config.width).lo();
  s.inputs.emplace_back("u_threshold", u0.str());
  s.claims.push_back(sign_claim("negative_beyond_radius",
                                std::string("p(u) ") + (spec.strict_negativity ? "< 0" : "<= 0") +
                                    " for u >= 2 pi r^2",
                                cert.p(), Region::ray(u0),
                                spec.strict_negativity ? SignClaim::Negative : SignClaim::NonPositive));
  s.claims.push_back(sign_claim("transform_nonnegative", "p_hat(u) >= 0 for u >= 0", cert.p_hat(),
                                Region::ray(Rational(0)), SignClaim::NonNegative));

  if (spec.decreasing_radii) {
    const auto& [lo_r, hi_r] = *spec.decreasing_radii;
    const Rational u_lo = u_of_norm(sqr(lo_r), config.width).lo();
    const Rational u_hi = u_of_norm(sqr(hi_r), config.width).hi();
    const Polynomial slope = cert.p().derivative() - cert.p() * Rational(1, 2);
    s.inputs.emplace_back("decreasing_window_u", "[" + u_lo.str() + ", " + u_hi.str() + "]");
    s.claims.push_back(sign_claim("decreasing_on_window",
                                  "p'(u) - p(u)/2 < 0 on the window, so |x| -> " + spec.label + "(x) decreases",
                                  slope, Region::closed(u_lo, u_hi), SignClaim::Negative));
  }
  s.finalize();
  return s;
}

// ---- Step 3 ------------------------------------------------------------------------------

StepRecord lemma_short_vector(const RadialCertificate& cert_f, const ProofConfig& config) {
  require_radius(cert_f);
  const auto& t = config.thresholds;
  const Rational r = *cert_f.sign_change_radius();
  StepRecord s;
  s.name = "lemma_short_vector";
  s.lemma = "every covolume-1 planar lattice has a nonzero vector of length at most " + r.decimal(3);
  s.inputs = {{"sign_change_radius", r.str()}};

  s.claims.push_back(exact_claim("equal_at_origin", "f(0) = f_hat(0)", cert_f.normalization(),
                                 cert_f.transform_at_origin()));
  s.claims.push_back(sign_claim("transform_nonnegative", "p_hat(u) >= 0 for u >= 0", cert_f.p_hat(),
                                Region::ray(Rational(0)), SignClaim::NonNegative));
  s.claims.push_back(sign_claim("negative_beyond_radius", "p(u) < 0 for u >= 2 pi r^2", cert_f.p(),
                                Region::ray(u_of_norm(Interval(r * r), config.width).lo()), SignClaim::Negative));
  const Enclosure root = [](const Rational& w) { return min_length_bound(w); };
  const Enclosure cst = [](const Rational& x) { return [x](const Rational&) { return Interval(x); }; }(t.root_lo);
  s.claims.push_back(enclosure_less("min_length_above", t.root_lo.decimal(3) + " < (4/3)^{1/4}", cst, root, config));
  s.claims.push_back(enclosure_less("min_length_below", "(4/3)^{1/4} < " + t.root_hi.decimal(3), root,
                                    [hi = t.root_hi](const Rational&) { return Interval(hi); }, config));
  s.claims.push_back(enclosure_less("window_nonempty", "(4/3)^{1/4} < r", root,
                                    [r](const Rational&) { return Interval(r); }, config));
  s.claims.push_back(logical_claim(
      "short_vector_exists",
      "Poisson summation with f_hat >= 0 gives sum_x f(x) >= f_hat(0) = f(0); since f < 0 for |x| >= r, some "
      "nonzero x has |x| < r; with the lower bound, the minimal length lies in [(4/3)^{1/4}, r]",
      {"equal_at_origin", "transform_nonnegative", "negative_beyond_radius", "min_length_above",
       "min_length_below", "window_nonempty", prior_step("verify_sign_conditions[f]")}));
  s.finalize();
  return s;
}

// ---- Step 4 ------------------------------------------------------------------------------

StepRecord lemma_at_most_six(const ProofConfig& config) {
  const auto& t = config.thresholds;
  StepRecord s;
  s.name = "lemma_at_most_six";
  s.lemma = "at most six lattice vectors have length in [(4/3)^{1/4}, " + t.nearly_minimal.decimal(3) + ")";
  s.inputs = {{"nearly_minimal", t.nearly_minimal.str()}, {"cos_bound", t.cos_bound.str()}, {"arc", t.arc.str()}};

  const Rational nm2 = t.nearly_minimal * t.nearly_minimal;
  const Enclosure cos_upper = [nm2](const Rational& w) {
    const Interval s43 = min_norm_bound(w / Rational(16));
    return (Interval(Rational(2) * nm2) - s43) / (Interval(Rational(2)) * s43);
  };
  const Enclosure bound = [c = t.cos_bound](const Rational&) { return Interval(c); };
  s.claims.push_back(enclosure_less("cos_angle_bound",
                                    "(2 * " + t.nearly_minimal.decimal(3) + "^2 - (4/3)^{1/2}) / (2 (4/3)^{1/2}) < " +
                                        t.cos_bound.decimal(3),
                                    cos_upper, bound, config));
  s.claims.push_back(rational_less("arc_below_half_turn", "2 * " + t.arc.decimal(3) + " < 1 (cos decreases there)",
                                   Rational(2) * t.arc, Rational(1)));
  const Enclosure cos_arc = [a = t.arc](const Rational& w) {
    return enclose_cos(two_pi_times(a, w / Rational(4)), w / Rational(2));
  };
  s.claims.push_back(enclosure_less("cos_of_arc", t.cos_bound.decimal(3) + " < cos(2 pi * " + t.arc.decimal(3) + ")",
                                    bound, cos_arc, config));
  s.claims.push_back(rational_less("seven_arcs_overflow", "1 < 7 * " + t.arc.decimal(3), Rational(1),
                                   Rational(7) * t.arc));
  s.claims.push_back(logical_claim(
      "at_most_six",
      "distinct nearly minimal x, y have angle > 2 pi * arc; seven pairwise-disjoint arcs of length 2 pi * arc "
      "would exceed the circle",
      {"cos_angle_bound", "arc_below_half_turn", "cos_of_arc", "seven_arcs_overflow"}));
  s.finalize();
  return s;
}

// ---- Step 5 ------------------------------------------------------------------------------

StepRecord lemma_length_gap(const RadialCertificate& cert_f, const ProofConfig& config,
                            std::optional<std::pair<Rational, Rational>> window) {
  const auto& t = config.thresholds;
  const auto [r_lo, r_hi] = window.value_or(std::make_pair(t.nearly_minimal, t.gap_end));
  if (r_lo.sign() < 0 || r_hi < r_lo) throw Error(ErrorCode::Precondition, "length-gap window must be 0 <= lo <= hi");
  const Polynomial& p = cert_f.p();
  StepRecord s;
  s.name = "lemma_length_gap";
  s.lemma = "no lattice vector has length in [" + r_lo.decimal(3) + ", " + r_hi.decimal(3) + "]";
  s.inputs = {{"window_lo", r_lo.str()}, {"window_hi", r_hi.str()}};

  const Enclosure threshold = [&p](const Rational& w) {
    return Interval(Rational(-3)) * eval_profile_at_norm(p, min_norm_bound(w / Rational(64)), w / Rational(4));
  };
  s.claims.push_back(enclosure_less("threshold_negative", "-3 f((4/3)^{1/4}) < 0", threshold,
                                    [](const Rational&) { return Interval(Rational(0)); }, config));

  const Interval u_first = u_of_norm(Interval(r_lo * r_lo), config.width);
  const Interval u_last = u_of_norm(Interval(r_hi * r_hi), config.width);
  const Rational u_lo = u_first.lo();
  const Rational u_hi = u_last.hi();
  s.inputs.emplace_back("u_range", "[" + u_lo.str() + ", " + u_hi.str() + "]");

  Claim gap;
  gap.id = "f_below_threshold";
  gap.kind = Claim::Kind::Less;
  gap.statement = "p(u) e^{-u/2} < -3 f((4/3)^{1/4}) for all u in [2 pi " + r_lo.decimal(3) + "^2, 2 pi " +
                  r_hi.decimal(3) + "^2]";
  Rational w = config.width;
  gap.verdict = Verdict::Inconclusive;
  for (int n = std::max(1, config.subdivisions); n <= config.max_subdivisions; n *= 2, w /= Rational(2)) {
    const Interval rhs = threshold(w);
    std::vector<Interval> pieces;
    const Rational step = (u_hi - u_lo) / Rational(n);
    for (int i = 0; i < n; ++i) {
      pieces.emplace_back(u_lo + step * Rational(i), i + 1 == n ? u_hi : u_lo + step * Rational(i + 1));
    }
    const auto ranges = kernels::profile_ranges(p, pieces, w, config.execution);
    Rational sup_lo = ranges.front().lo();
    Rational sup_hi = ranges.front().hi();
    bool all_below = true;
    bool falsified = false;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      sup_lo = std::max(sup_lo, ranges[i].lo());
      sup_hi = std::max(sup_hi, ranges[i].hi());
      if (ranges[i].certainly_less(rhs)) continue;
      all_below = false;
      // A midpoint inside the exact window whose value is certainly above the threshold refutes the claim.
      const Rational m = pieces[i].mid();
      if (m >= u_first.hi() && m <= u_last.lo() && profile_range(p, Interval(m), w).lo() >= rhs.hi()) {
        falsified = true;
      }
    }
    gap.lhs = Interval(sup_lo, sup_hi);
    gap.rhs = rhs;
    gap.note = std::to_string(n) + " uniform u-pieces";
    if (all_below) {
      gap.verdict = Verdict::Verified;
      break;
    }
    if (falsified) {
      gap.verdict = Verdict::Falsified;
      break;
    }
  }
  s.claims.push_back(gap);
  s.claims.push_back(logical_claim(
      "gap_excluded",
      "at most six positive terms besides x = 0, each <= f((4/3)^{1/4}) since f decreases on [0, r]; a pair "
      "+-x in the window would push sum_x f(x) - f_hat(0) below 0",
      {"threshold_negative", "f_below_threshold", prior_step("lemma_at_most_six"),
       prior_step("verify_sign_conditions[f]")}));
  s.finalize();
  return s;
}

// ---- Step 6 ------------------------------------------------------------------------------

StepRecord lemma_at_least_six(const RadialCertificate& cert_g, const ProofConfig& config) {
  const auto& t = config.thresholds;
  const Polynomial& p = cert_g.p();
  StepRecord s;
  s.name = "lemma_at_least_six";
  s.lemma = "more than five lattice vectors are nearly minimal";
  const Rational diff = cert_g.transform_at_origin() - cert_g.normalization();
  s.inputs = {{"g0", cert_g.normalization().str()},
              {"g_hat0", cert_g.transform_at_origin().str()},
              {"g_hat0_minus_g0", diff.str()}};
  s.claims.push_back(rational_less("transform_excess_positive", "0 < g_hat(0) - g(0)", Rational(0), diff));
  const Enclosure g_star = [&p](const Rational& w) {
    return eval_profile_at_norm(p, min_norm_bound(w / Rational(64)), w / Rational(4));
  };
  s.claims.push_back(enclosure_less("g_at_min_length_positive", "0 < g((4/3)^{1/4})",
                                    [](const Rational&) { return Interval(Rational(0)); }, g_star, config));
  const Enclosure quotient = [&g_star, diff](const Rational& w) {
    const Interval g = g_star(w / Rational(4096));
    if (g.contains_zero()) throw Error(ErrorCode::PrecisionUnreachable, "g((4/3)^{1/4}) not separated from 0");
    return Interval(diff) / g;
  };
  s.claims.push_back(enclosure_less("count_quotient", t.count_bound.decimal(2) + " < (g_hat(0) - g(0)) / g((4/3)^{1/4})",
                                    [c = t.count_bound](const Rational&) { return Interval(c); }, quotient, config));
  s.claims.push_back(rational_less("bound_exceeds_five", "5 < " + t.count_bound.decimal(2), Rational(5), t.count_bound));
  s.claims.push_back(logical_claim(
      "at_least_six",
      "Poisson summation with g_hat >= 0 and g <= 0 outside the nearly-minimal window gives g(0) + |M| g((4/3)^{1/4}) "
      ">= g_hat(0), so |M| > bound > 5; with the upper bound, exactly six",
      {"transform_excess_positive", "g_at_min_length_positive", "count_quotient", "bound_exceeds_five",
       prior_step("verify_sign_conditions[g]"), prior_step("lemma_length_gap"), prior_step("lemma_at_most_six")}));
  s.finalize();
  return s;
}

// ---- Step 7 ------------------------------------------------------------------------------

StepRecord geometry_argument(const ProofConfig& config) {
  const auto& t = config.thresholds;
  StepRecord s;
  s.name = "geometry_argument";
  s.lemma = "the lattice has a basis whose rescaled Gram matrix is within " + t.gram_distance.decimal(3) +
            " of ((2,1),(1,2))";
  const Rational nm2 = t.nearly_minimal * t.nearly_minimal;
  s.inputs = {{"nearly_minimal", t.nearly_minimal.str()}, {"gram_distance", t.gram_distance.str()}};

  // (a) x - y is nearly minimal.
  const Enclosure diff_norm = [nm2](const Rational& w) {
    return Interval(Rational(2) * nm2) - min_norm_bound(w);
  };
  s.claims.push_back(enclosure_less("difference_norm", "|x-y|^2 <= 2 * " + t.nearly_minimal.decimal(3) +
                                                           "^2 - (4/3)^{1/2} < " + t.difference_norm.decimal(2),
                                    diff_norm, [d = t.difference_norm](const Rational&) { return Interval(d); },
                                    config));
  s.claims.push_back(rational_less("difference_below_gap_end",
                                   t.difference_norm.decimal(2) + " < " + t.gap_end.decimal(2) + "^2",
                                   t.difference_norm, t.gap_end * t.gap_end));
  s.claims.push_back(logical_claim(
      "difference_nearly_minimal",
      "two nearly minimal x, y lie within angle 2 pi/6 (six vectors around the circle); |x-y| < 1.62 and the gap "
      "lemma force x-y to be nearly minimal, so +-x, +-y, +-(x-y) are all of them",
      {"difference_norm", "difference_below_gap_end", prior_step("lemma_length_gap"),
       prior_step("lemma_at_least_six")}));

  // (b) basis lemma.
  s.claims.push_back(rational_less("arc_below_sixth", t.arc.decimal(3) + " < 1/6", t.arc, Rational(1, 6)));
  s.claims.push_back(logical_claim(
      "basis_lemma",
      "a shortest z outside the span would satisfy cos(angle(u, z)) <= |u|/(2|z|) < 1/2 = cos(2 pi/6) for every "
      "nearly minimal u, giving seven vectors pairwise separated by 2 pi * arc",
      {"arc_below_sixth", prior_step("lemma_at_most_six")}));

  // (c) rescaled Gram entries.
  s.claims.push_back(exact_claim("rescaled_min_norm", "3 * (4/3) = 2^2, so 3^{1/2} (4/3)^{1/2} = 2",
                                 Rational(3) * Rational(4, 3), Rational(4)));
  s.claims.push_back(enclosure_less("rescaled_length", "3^{1/4} * " + t.nearly_minimal.decimal(3) + " < " +
                                                           t.rescaled_length.decimal(3),
                                    [nm = t.nearly_minimal](const Rational& w) {
                                      return fourth_root_of(Rational(3), w) * Interval(nm);
                                    },
                                    [l = t.rescaled_length](const Rational&) { return Interval(l); }, config));
  s.claims.push_back(enclosure_less("rescaled_norm", "3^{1/2} * " + t.nearly_minimal.decimal(3) + "^2 < " +
                                                         t.rescaled_norm.decimal(2),
                                    [nm2](const Rational& w) { return sqrt_of(Rational(3), w) * Interval(nm2); },
                                    [n = t.rescaled_norm](const Rational&) { return Interval(n); }, config));
  s.claims.push_back(rational_less("rescaled_length_norm", t.rescaled_length.decimal(3) + "^2 < " +
                                                               t.rescaled_norm.decimal(2),
                                   t.rescaled_length * t.rescaled_length, t.rescaled_norm));
  s.claims.push_back(enclosure_less(
      "inner_product_upper",
      t.rescaled_length.decimal(3) + "^2 cos(2 pi * " + t.arc.decimal(3) + ") < " + t.inner_product.decimal(3),
      [l2 = t.rescaled_length * t.rescaled_length, a = t.arc](const Rational& w) {
        return Interval(l2) * enclose_cos(two_pi_times(a, w / Rational(64)), w / Rational(16));
      },
      [ip = t.inner_product](const Rational&) { return Interval(ip); }, config));
  s.claims.push_back(exact_claim("inner_product_lower", "2 cos(2 pi/6) = 1", Rational(2) * Rational(1, 2),
                                 Rational(1)));
  s.claims.push_back(rational_at_most("diagonal_distance", t.rescaled_norm.decimal(2) + " - 2 <= " +
                                                              t.gram_distance.decimal(3),
                                      t.rescaled_norm - Rational(2), t.gram_distance));
  s.claims.push_back(rational_at_most("off_diagonal_distance", t.inner_product.decimal(3) + " - 1 <= " +
                                                                  t.gram_distance.decimal(3),
                                      t.inner_product - Rational(1), t.gram_distance));
  // (d) link to the local optimality radius.
  s.claims.push_back(rational_less("distance_below_radius", t.gram_distance.decimal(3) + " < 12/47",
                                   t.gram_distance, Rational(12, 47)));
  s.claims.push_back(logical_claim(
      "perturbation_of_hexagonal",
      "the rescaled basis has norms in [2, 2.16) and inner product in [1, 1.243], so its Gram matrix is a "
      "perturbation of ((2,1),(1,2)) of size below 12/47",
      {"difference_nearly_minimal", "basis_lemma", "rescaled_min_norm", "rescaled_length", "rescaled_norm",
       "rescaled_length_norm", "inner_product_upper", "inner_product_lower", "diagonal_distance",
       "off_diagonal_distance", "distance_below_radius"}));
  s.finalize();
  return s;
}

// ---- Step 8 ------------------------------------------------------------------------------

namespace {

using Triple = std::array<Rational, 3>;

// Max over the hexagon {x+y+z = 0, max|.| = 1} of min(x, y, z). On each edge min is concave
// piecewise linear with breakpoints where two coordinates agree, so it suffices to check
// endpoints and those breakpoints.
Rational constrained_case_maximum() {
  const std::array<Triple, 6> vertices{{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}};
  Rational best(-2);
  for (std::size_t e = 0; e < vertices.size(); ++e) {
    const Triple& a = vertices[e];
    const Triple& b = vertices[(e + 1) % vertices.size()];
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        // a_i + t (b_i - a_i) = a_j + t (b_j - a_j)
        const Rational den = (b[i] - a[i]) - (b[j] - a[j]);
        if (den.is_zero()) continue;
        const Rational tt = (a[j] - a[i]) / den;
        if (tt.sign() >= 0 && tt <= Rational(1)) ts.push_back(tt);
      }
    }
    for (const auto& tt : ts) {
      Rational m = a[0] + tt * (b[0] - a[0]);
      for (std::size_t i = 1; i < 3; ++i) m = std::min(m, a[i] + tt * (b[i] - a[i]));
      best = std::max(best, m);
    }
  }
  return best;
}

// Checks the rescaling identity and coefficient bounds at deterministic exact samples.
bool rescaling_identity_holds(const Rational& rho_max, int samples) {
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < samples; ++i) {
    const Rational a = rho_max * Rational(dist(rng), 1000);
    const Rational b = rho_max * Rational(dist(rng), 1000);
    const Rational c = rho_max * Rational(dist(rng), 1000);
    const Rational rho = std::max({abs(a), abs(b), abs(c)});
    const Rational den = Rational(3) + a + c - b;
    const Rational big_a = (a - Rational(2) * c + Rational(2) * b) / den;
    const Rational big_b = (Rational(4) * b - a - c) / den;
    const Rational big_c = (Rational(2) * b + c - Rational(2) * a) / den;
    const Rational scale = Rational(1) + (a + c - b) / Rational(3);
    if (scale * (Rational(2) + big_a) != Rational(2) + a) return false;
    if (scale * (Rational(1) + big_b) != Rational(1) + b) return false;
    if (scale * (Rational(2) + big_c) != Rational(2) + c) return false;
    if (big_a + big_c != big_b) return false;
    if (rho.is_zero()) continue;
    if (abs(big_a) > Rational(5) * rho / (Rational(3) - Rational(3) * rho)) return false;
    if (abs(big_b) > Rational(2) * rho / (Rational(1) - rho)) return false;
    if (abs(big_c) > Rational(5) * rho / (Rational(3) - Rational(3) * rho)) return false;
  }
  return true;
}

}  // namespace

StepRecord local_optimality_certificate(const Rational& rho_max, const ProofConfig& config) {
  (void)config;
  if (rho_max.sign() <= 0 || rho_max > Rational(12, 47)) {
    throw Error(ErrorCode::Precondition, "rho_max must lie in (0, 12/47], got " + rho_max.str());
  }
  const Rational limit(24, 35);
  StepRecord s;
  s.name = "local_optimality_certificate";
  s.lemma = "for perturbation size rho < " + rho_max.str() +
            ", the density strictly drops unless the form stays proportional to ((2,1),(1,2))";
  s.inputs = {{"rho_max", rho_max.str()}};

  // (i) constrained case a + c = b.
  s.claims.push_back(exact_claim("constrained_case_analysis",
                                 "on {a+c=b, rho=1}: max over the boundary of min(a, c, -b) equals -1/2",
                                 constrained_case_maximum(), Rational(-1, 2)));
  s.claims.push_back(logical_claim("constrained_minimum",
                                   "Q_rho(1,0), Q_rho(0,1), Q_rho(1,-1) equal 2+a, 2+c, 2-b, so M_rho <= 2 - rho/2; "
                                   "D_rho = 3 + ac - b^2 >= 3 - 2 rho^2",
                                   {"constrained_case_analysis"}));

  // (ii) 3(2 - rho/2)^2 < 4(3 - 2 rho^2) on (0, 24/35).
  const Polynomial lhs_sq = Polynomial{Rational(3)} * Polynomial{Rational(2), Rational(-1, 2)} *
                            Polynomial{Rational(2), Rational(-1, 2)};
  const Polynomial rhs_sq = Polynomial{Rational(12), Rational(0), Rational(-8)};
  const Polynomial gap = rhs_sq - lhs_sq;
  s.inputs.emplace_back("density_gap_polynomial", gap.str());
  s.claims.push_back(sign_claim("density_gap_positive", "4(3-2 rho^2) - 3(2-rho/2)^2 > 0 for rho in (0, 24/35)", gap,
                                Region::open(Rational(0), limit), SignClaim::Positive));
  s.claims.push_back(exact_claim("density_gap_boundary", "4(3-2 rho^2) - 3(2-rho/2)^2 = 0 at rho = 24/35",
                                 gap.evaluate(limit), Rational(0)));
  s.claims.push_back(sign_claim("determinant_bound_positive", "3 - 2 rho^2 > 0 on [0, 24/35]", rhs_sq * Rational(1, 4),
                                Region::closed(Rational(0), limit), SignClaim::Positive));
  s.claims.push_back(sign_claim("minimum_bound_positive", "2 - rho/2 > 0 on [0, 24/35]",
                                Polynomial{Rational(2), Rational(-1, 2)}, Region::closed(Rational(0), limit),
                                SignClaim::Positive));

  // (iii) reduction to the constrained case.
  s.claims.push_back(exact_claim("rescaling_identity",
                                 "(2+a,1+b,2+c) = (1+(a+c-b)/3)(2+A,1+B,2+C), A+C=B, and the |A|,|B|,|C| bounds, at "
                                 "256 exact samples",
                                 Rational(rescaling_identity_holds(rho_max, 256) ? 1 : 0), Rational(1)));
  struct Bound {
    std::string id;
    std::string text;
    Polynomial num;
    Polynomial den;
  };
  const std::vector<Bound> bounds{
      {"bound_A", "|A| <= 5 rho/(3-3 rho)", Polynomial{0, 5}, Polynomial{3, -3}},
      {"bound_B", "|B| <= 2 rho/(1-rho)", Polynomial{0, 2}, Polynomial{1, -1}},
      {"bound_C", "|C| <= 5 rho/(3-3 rho)", Polynomial{0, 5}, Polynomial{3, -3}},
  };
  std::vector<std::string> premises;
  for (const auto& b : bounds) {
    const Rational value = b.num.evaluate(rho_max) / b.den.evaluate(rho_max);
    s.claims.push_back(sign_claim(b.id + "_denominator", "denominator of " + b.text + " > 0 on [0, rho_max]", b.den,
                                  Region::closed(Rational(0), rho_max), SignClaim::Positive));
    const Polynomial slope = b.num.derivative() * b.den - b.num * b.den.derivative();
    s.claims.push_back(sign_claim(b.id + "_increasing", b.text + " increases on [0, rho_max]", slope,
                                  Region::closed(Rational(0), rho_max), SignClaim::Positive));
    s.claims.push_back(rational_at_most(b.id + "_at_rho_max", b.text + " at rho_max is at most 24/35", value, limit));
    premises.insert(premises.end(), {b.id + "_denominator", b.id + "_increasing", b.id + "_at_rho_max"});
  }
  premises.insert(premises.end(), {"constrained_minimum", "density_gap_positive", "determinant_bound_positive",
                                   "minimum_bound_positive", "rescaling_identity"});
  s.claims.push_back(logical_claim(
      "local_optimality",
      "for rho < rho_max every bound is strictly below 24/35, so Q_rho is a multiple of a constrained perturbation "
      "with strictly smaller normalized density, unless A = B = C = 0",
      premises));
  s.finalize();
  return s;
}

// ---- Perturbations -----------------------------------------------------------------------

Rational PerturbedGram::rho() const { return std::max({abs(a), abs(b), abs(c)}); }

GramMatrix PerturbedGram::matrix() const {
  return GramMatrix::exact({{Rational(2) + a, Rational(1) + b}, {Rational(1) + b, Rational(2) + c}});
}

Rational PerturbedGram::determinant() const {
  return Rational(3) + Rational(2) * (a + c - b) + (a * c - b * b);
}

Rational PerturbedGram::minimal_norm(const EnumerationOptions& options) const {
  return lpcert::minimal_norm(matrix(), options).lo();
}

bool PerturbedGram::proportional_to_hexagonal() const {
  const Rational d = Rational(2) + a;
  return Rational(2) + c == d && Rational(2) * (Rational(1) + b) == d;
}

Interval perturbed_density(const Rational& a, const Rational& b, const Rational& c, const Rational& width) {
  const PerturbedGram q{a, b, c};
  certify_positive_definite(q.matrix());
  const Rational m = q.minimal_norm();
  const Rational d = q.determinant();
  const long bits = bits_of(width) + 4;
  const Interval pi = enclose_pi(width / Rational(8));
  return simplify(pi * Interval(m / Rational(4)) / sqrt(Interval(d), bits), bits);
}

Interval hexagonal_density(const Rational& width) { return perturbed_density(0, 0, 0, width); }

// ---- Pipeline ----------------------------------------------------------------------------

ProofReport prove_hexagonal_optimal(const ProofConfig& config) {
  ProofReport report;
  auto push = [&report](StepRecord step) {
    report.steps.push_back(std::move(step));
    return report.steps.back().verdict == Verdict::Verified;
  };
  auto finish = [&report]() {
    const auto& last = report.steps.back();
    report.verdict = last.verdict;
    return report;
  };
  std::optional<Certificates> certs;
  if (!push(construct_certificates(config, certs))) return finish();
  if (!push(verify_sign_conditions(certs->f, sign_spec_f(config), config))) return finish();
  if (!push(verify_sign_conditions(certs->g, sign_spec_g(config), config))) return finish();
  // Both sign-condition records form the second step of the chain.
  auto g_step = std::move(report.steps.back());
  report.steps.pop_back();
  auto& f_step = report.steps.back();
  f_step.name = "verify_sign_conditions";
  f_step.lemma = "sign conditions of f and g";
  for (auto& c : f_step.claims) c.id = "f." + c.id;
  for (auto& c : g_step.claims) {
    c.id = "g." + c.id;
    f_step.claims.push_back(std::move(c));
  }
  for (auto& [k, v] : g_step.inputs) f_step.inputs.emplace_back("g." + k, v);
  for (auto& [k, v] : f_step.inputs) {
    if (k.rfind("g.", 0) != 0 && k.rfind("f.", 0) != 0) k = "f." + k;
  }
  f_step.finalize();

  if (!push(lemma_short_vector(certs->f, config))) return finish();
  if (!push(lemma_at_most_six(config))) return finish();
  if (!push(lemma_length_gap(certs->f, config))) return finish();
  if (!push(lemma_at_least_six(certs->g, config))) return finish();
  if (!push(geometry_argument(config))) return finish();
  push(local_optimality_certificate(config.rho_max, config));
  return finish();
}

ReplayResult replay(const ProofReport& report, const ProofConfig& config) {
  ReplayResult result;
  auto mismatch = [&result](std::string m) {
    result.consistent = false;
    result.mismatches.push_back(std::move(m));
  };
  const ProofReport fresh = prove_hexagonal_optimal(config);
  if (fresh.verdict != report.verdict) mismatch("overall verdict differs");
  if (fresh.steps.size() != report.steps.size()) mismatch("step count differs");
  const std::size_t n = std::min(fresh.steps.size(), report.steps.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& old_step = report.steps[i];
    const auto& new_step = fresh.steps[i];
    if (old_step.name != new_step.name) mismatch("step " + std::to_string(i + 1) + " name differs");
    if (old_step.verdict != new_step.verdict) mismatch(old_step.name + ": verdict differs");
    std::map<std::string, const Claim*> by_id;
    for (const auto& c : new_step.claims) by_id[c.id] = &c;
    for (const auto& c : old_step.claims) {
      const std::string where = old_step.name + "/" + c.id;
      const auto it = by_id.find(c.id);
      if (it == by_id.end()) {
        mismatch(where + ": claim missing from recomputation");
        continue;
      }
      const Claim& f = *it->second;
      if (f.verdict != c.verdict) mismatch(where + ": verdict differs");
      if (c.lhs && f.lhs && !c.lhs->intersects(*f.lhs)) mismatch(where + ": lhs enclosures disjoint");
      if (c.rhs && f.rhs && !c.rhs->intersects(*f.rhs)) mismatch(where + ": rhs enclosures disjoint");
      if ((c.kind == Claim::Kind::Exact || c.kind == Claim::Kind::AtMost) && c.lhs && c.rhs) {
        const bool holds = c.kind == Claim::Kind::Exact ? c.lhs->lo() == c.rhs->lo() : c.lhs->lo() <= c.rhs->lo();
        if (holds != (c.verdict == Verdict::Verified)) mismatch(where + ": stored exact values contradict verdict");
      }
      if (c.kind == Claim::Kind::Less && c.lhs && c.rhs && c.verdict == Verdict::Verified &&
          !c.lhs->certainly_less(*c.rhs)) {
        mismatch(where + ": stored enclosures do not separate");
      }
      if (c.kind == Claim::Kind::Sign && c.sign && c.polynomial) {
        if (!recheck(*c.polynomial, *c.sign)) mismatch(where + ": sign certificate fails recheck");
        if (!f.polynomial || !(*f.polynomial == *c.polynomial)) mismatch(where + ": polynomial differs");
      }
    }
  }
  return result;
}

}  // namespace lpcert
