#include "lpcert/sturm.hpp"

#include <algorithm>

namespace lpcert {

Region Region::closed(const Rational& a, const Rational& b) {
  if (a > b) throw Error(ErrorCode::Precondition, "closed region with lo > hi");
  if (a == b) return point(a);
  return {Kind::Closed, a, b};
}

Region Region::open(const Rational& a, const Rational& b) {
  if (a >= b) throw Error(ErrorCode::Precondition, "open region must have lo < hi");
  return {Kind::Open, a, b};
}

bool Region::contains(const Rational& x) const {
  switch (kind) {
    case Kind::Point: return x == lo;
    case Kind::Closed: return lo <= x && x <= hi;
    case Kind::Open: return lo < x && x < hi;
    case Kind::Ray: return lo <= x;
  }
  return false;
}

std::string Region::str() const {
  switch (kind) {
    case Kind::Point: return "{" + lo.str() + "}";
    case Kind::Closed: return "[" + lo.str() + ", " + hi.str() + "]";
    case Kind::Open: return "(" + lo.str() + ", " + hi.str() + ")";
    case Kind::Ray: return "[" + lo.str() + ", inf)";
  }
  return "";
}

std::string claim_symbol(SignClaim claim) {
  switch (claim) {
    case SignClaim::NonNegative: return ">= 0";
    case SignClaim::Positive: return "> 0";
    case SignClaim::NonPositive: return "<= 0";
    case SignClaim::Negative: return "< 0";
  }
  return "";
}

bool claim_holds_at(SignClaim claim, const Rational& value) {
  switch (claim) {
    case SignClaim::NonNegative: return value.sign() >= 0;
    case SignClaim::Positive: return value.sign() > 0;
    case SignClaim::NonPositive: return value.sign() <= 0;
    case SignClaim::Negative: return value.sign() < 0;
  }
  return false;
}

namespace {

Polynomial positive_normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / abs(p.leading()));
}

void require_nonzero(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root counting on the zero polynomial");
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  require_nonzero(p);
  std::vector<Polynomial> seq;
  seq.push_back(positive_normalized(squarefree_part(p)));
  if (seq.back().degree() == 0) return seq;
  seq.push_back(positive_normalized(seq.back().derivative()));
  while (seq.back().degree() > 0) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(positive_normalized(-r));
  }
  return seq;
}

int sign_variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = q.evaluate(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sign_variations_at_infinity(const std::vector<Polynomial>& seq) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = q.leading().sign();
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sturm_root_count(const Polynomial& p, const Region& region) {
  require_nonzero(p);
  if (region.kind == Region::Kind::Point) return p.evaluate(region.lo).is_zero() ? 1 : 0;
  const auto seq = sturm_sequence(p);
  const int va = sign_variations_at(seq, region.lo);
  switch (region.kind) {
    case Region::Kind::Closed: return va - sign_variations_at(seq, region.hi);
    case Region::Kind::Open:
      return va - sign_variations_at(seq, region.hi) - (p.evaluate(region.hi).is_zero() ? 1 : 0);
    case Region::Kind::Ray: return va - sign_variations_at_infinity(seq);
    case Region::Kind::Point: break;
  }
  return 0;
}

int count_roots_in(const Polynomial& p, const Region& region) {
  const int half_open = sturm_root_count(p, region);
  const bool lo_included = region.kind == Region::Kind::Closed || region.kind == Region::Kind::Ray;
  return half_open + ((lo_included && p.evaluate(region.lo).is_zero()) ? 1 : 0);
}

Rational root_bound(const Polynomial& p) {
  require_nonzero(p);
  Rational m;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coefficient(k) / p.leading()));
  return m + Rational(1);
}

namespace {

struct Isolator {
  const Polynomial& s;
  const std::vector<Polynomial>& seq;
  const std::optional<Rational>& max_width;
  std::vector<RootBracket>& out;

  // Roots in (l, h], with var_l = V(l), var_h = V(h).
  void run(const Rational& l, const Rational& h, int var_l, int var_h) {
    const int count = var_l - var_h;
    if (count <= 0) return;
    if (count == 1) {
      if (s.evaluate(h).is_zero()) {
        out.push_back({h, h});
        return;
      }
      const bool narrow = !max_width || (h - l) <= *max_width;
      if (narrow && !s.evaluate(l).is_zero()) {
        out.push_back({l, h});
        return;
      }
    }
    const Rational m = (l + h) / Rational(2);
    const int var_m = sign_variations_at(seq, m);
    run(l, m, var_l, var_m);
    run(m, h, var_m, var_h);
  }
};

}  // namespace

std::vector<RootBracket> isolate_roots(const Polynomial& p, const Region& region,
                                       const std::optional<Rational>& max_width) {
  require_nonzero(p);
  std::vector<RootBracket> out;
  if (region.kind == Region::Kind::Point) {
    if (p.evaluate(region.lo).is_zero()) out.push_back({region.lo, region.lo});
    return out;
  }
  const Polynomial s = squarefree_part(p);
  if (s.degree() <= 0) return out;
  const auto seq = sturm_sequence(p);
  const bool lo_included = region.kind != Region::Kind::Open;
  if (lo_included && s.evaluate(region.lo).is_zero()) out.push_back({region.lo, region.lo});

  Rational hi = region.hi;
  if (region.kind == Region::Kind::Ray) hi = std::max(region.lo + Rational(1), root_bound(s));
  Isolator iso{s, seq, max_width, out};
  iso.run(region.lo, hi, sign_variations_at(seq, region.lo), sign_variations_at(seq, hi));
  if (region.kind == Region::Kind::Open) {
    std::erase_if(out, [&](const RootBracket& b) { return b.exact() && b.lo == region.hi; });
  }
  std::sort(out.begin(), out.end(), [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
  return out;
}

namespace {

Region interior(const Region& region) {
  switch (region.kind) {
    case Region::Kind::Closed: return Region::open(region.lo, region.hi);
    default: return region;  // Ray interior (a, inf) is what sturm_root_count counts for a ray.
  }
}

Rational nonroot_sample(const Polynomial& p, const Region& region) {
  if (region.kind == Region::Kind::Ray) {
    for (long k = 1;; ++k) {
      Rational x = region.lo + Rational(k);
      if (!p.evaluate(x).is_zero()) return x;
    }
  }
  const Rational width = region.hi - region.lo;
  for (long level = 1;; ++level) {
    const Rational step = width * pow2(-level);
    for (long i = 1; i < (1L << level); i += 2) {
      Rational x = region.lo + step * Rational(i);
      if (!p.evaluate(x).is_zero()) return x;
    }
  }
}

int wanted_sign(SignClaim claim) {
  return (claim == SignClaim::NonNegative || claim == SignClaim::Positive) ? 1 : -1;
}

bool is_strict(SignClaim claim) { return claim == SignClaim::Positive || claim == SignClaim::Negative; }

SignCertificate gather_evidence(const Polynomial& p, const Region& region, SignClaim claim) {
  SignCertificate cert;
  cert.region = region;
  cert.claim = claim;
  if (region.kind == Region::Kind::Point) {
    cert.sample = region.lo;
    cert.sample_value = p.evaluate(region.lo);
    cert.distinct_roots = cert.sample_value.is_zero() ? 1 : 0;
    cert.boundary_values.emplace_back(region.lo, cert.sample_value);
    return cert;
  }
  cert.distinct_roots = count_roots_in(p, region);
  cert.sign_change_roots = sturm_root_count(sign_changing_part(p), interior(region));
  cert.sample = nonroot_sample(p, region);
  cert.sample_value = p.evaluate(cert.sample);
  if (region.kind != Region::Kind::Open) cert.boundary_values.emplace_back(region.lo, p.evaluate(region.lo));
  if (region.kind == Region::Kind::Closed) cert.boundary_values.emplace_back(region.hi, p.evaluate(region.hi));
  return cert;
}

bool evidence_implies_claim(const SignCertificate& cert) {
  if (cert.region.kind == Region::Kind::Point) return claim_holds_at(cert.claim, cert.sample_value);
  if (!cert.region.contains(cert.sample) || cert.sample_value.is_zero()) return false;
  if (cert.sample_value.sign() != wanted_sign(cert.claim)) return false;
  if (is_strict(cert.claim)) return cert.distinct_roots == 0;
  if (cert.sign_change_roots != 0) return false;
  return std::all_of(cert.boundary_values.begin(), cert.boundary_values.end(),
                     [&](const auto& bv) { return claim_holds_at(cert.claim, bv.second); });
}

/// The rational with the least denominator in [lo, hi] (Stern-Brocot descent), lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  const Integer fl = floor(lo);
  if (Rational(fl, Integer(1)) == lo) return lo;
  if (Rational(fl + 1, Integer(1)) <= hi) return Rational(fl + 1, Integer(1));
  // lo, hi share the integer part fl: recurse on the reciprocals of the fractional parts.
  const Rational f = lo - Rational(fl, Integer(1));
  const Rational g = hi - Rational(fl, Integer(1));
  return Rational(fl, Integer(1)) + Rational(1) / simplest_between(Rational(1) / g, Rational(1) / f);
}

[[noreturn]] void throw_with_witness(const Polynomial& p, const Region& region, SignClaim claim) {
  const std::string what = "p " + claim_symbol(claim) + " fails on " + region.str();
  // Narrow, disjoint root brackets: the sign of p is constant strictly between consecutive
  // endpoints, so the endpoints, their midpoints and the simplest rational in each bracket
  // (an exact rational root, when there is one) meet every place where the claim can fail.
  std::vector<RootBracket> brackets;
  for (const auto& b : isolate_roots(p, region)) {
    if (b.exact()) {
      brackets.push_back(b);
      continue;
    }
    for (const auto& r : isolate_roots(p, Region::closed(b.lo, b.hi), (b.hi - b.lo) * pow2(-64))) {
      if (r.hi > b.lo) brackets.push_back(r);
    }
  }
  std::vector<Rational> points;
  if (region.kind != Region::Kind::Open) points.push_back(region.lo);
  if (region.kind == Region::Kind::Closed) points.push_back(region.hi);
  for (const auto& b : brackets) {
    points.push_back(b.lo);
    points.push_back(b.hi);
    points.push_back(simplest_between(b.lo, b.hi));
  }
  if (region.kind == Region::Kind::Ray) {
    points.push_back((points.empty() ? region.lo : *std::max_element(points.begin(), points.end())) + Rational(1));
  }
  if (region.kind == Region::Kind::Open) {
    points.push_back(region.lo);
    points.push_back(region.hi);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rational> candidates = points;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) candidates.push_back((points[i] + points[i + 1]) / Rational(2));
  std::sort(candidates.begin(), candidates.end());
  for (const auto& x : candidates) {
    if (region.contains(x) && !claim_holds_at(claim, p.evaluate(x))) throw ClaimFalseError(what, {x, x});
  }
  if (!brackets.empty()) throw ClaimFalseError(what, brackets.front());
  throw Error(ErrorCode::ClaimFalse, what + " (no witness located)");
}

}  // namespace

SignCertificate certify_sign_on_region(const Polynomial& p, const Region& region, SignClaim claim) {
  require_nonzero(p);
  SignCertificate cert = gather_evidence(p, region, claim);
  if (!evidence_implies_claim(cert)) throw_with_witness(p, region, claim);
  return cert;
}

bool recheck(const Polynomial& p, const SignCertificate& cert) {
  if (p.is_zero()) return false;
  const SignCertificate fresh = gather_evidence(p, cert.region, cert.claim);
  if (p.evaluate(cert.sample) != cert.sample_value || !cert.region.contains(cert.sample)) return false;
  if (fresh.distinct_roots != cert.distinct_roots || fresh.sign_change_roots != cert.sign_change_roots) return false;
  if (fresh.boundary_values != cert.boundary_values) return false;
  return evidence_implies_claim(cert);
}

}  // namespace lpcert
