#include <algorithm>
#include <random>

#include "doctest.h"
#include "lpcert/sturm.hpp"

using namespace lpcert;

namespace {

Rational rand_rational(std::mt19937_64& rng, long span, long den = 8) {
  std::uniform_int_distribution<long> num(-span * den, span * den);
  return Rational(num(rng)) / Rational(den);
}

/// Product of (u - r_i)^{m_i} times a random nonzero scale; roots returned sorted.
Polynomial random_factored(std::mt19937_64& rng, std::vector<std::pair<Rational, int>>& roots) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  Polynomial p{Rational(rng() % 2 == 0 ? 3 : -2)};
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const Rational r = rand_rational(rng, 6, 4);
    const int m = mult(rng);
    roots.emplace_back(r, m);
    p = p * Polynomial::from_root(r, m);
  }
  if (rng() % 3 == 0) p = p * Polynomial{1, 0, 1};  // no real roots
  return p;
}

bool brute_sign_ok(SignClaim claim, const Polynomial& p, const Rational& x) { return claim_holds_at(claim, p(x)); }

}  // namespace

TEST_CASE("root counts follow the half-open convention") {
  const Polynomial p = Polynomial::from_root(1) * Polynomial::from_root(2) * Polynomial::from_root(3);
  CHECK(sturm_root_count(p, Region::closed(Rational(0), Rational(4))) == 3);
  CHECK(sturm_root_count(p, Region::closed(Rational(1), Rational(3))) == 2);  // (1,3]
  CHECK(sturm_root_count(p, Region::open(Rational(1), Rational(3))) == 1);
  CHECK(sturm_root_count(p, Region::ray(Rational(2))) == 1);
  CHECK(sturm_root_count(p, Region::point(Rational(2))) == 1);
  CHECK(count_roots_in(p, Region::closed(Rational(1), Rational(3))) == 3);
  CHECK_THROWS_AS(sturm_root_count(Polynomial{}, Region::ray(Rational(0))), Error);
}

TEST_CASE("root counts are additive over adjacent intervals") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::pair<Rational, int>> roots;
    const Polynomial p = random_factored(rng, roots);
    Rational a = rand_rational(rng, 8), b = rand_rational(rng, 8), c = rand_rational(rng, 8);
    std::array<Rational, 3> abc{a, b, c};
    std::sort(abc.begin(), abc.end());
    const int whole = sturm_root_count(p, Region::closed(abc[0], abc[2]));
    const int left = sturm_root_count(p, Region::closed(abc[0], abc[1]));
    const int right = sturm_root_count(p, Region::closed(abc[1], abc[2]));
    CHECK(whole == left + right);
    // Oracle: distinct known roots in (a, c].
    std::vector<Rational> distinct;
    for (const auto& [r, m] : roots) {
      if (r > abc[0] && r <= abc[2] && std::find(distinct.begin(), distinct.end(), r) == distinct.end()) {
        distinct.push_back(r);
      }
    }
    CHECK(whole == static_cast<int>(distinct.size()));
  }
}

TEST_CASE("isolated roots bracket the known roots") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<Rational, int>> roots;
    const Polynomial p = random_factored(rng, roots);
    const auto brackets = isolate_roots(p, Region::closed(Rational(-10), Rational(10)), Rational(1, 1000));
    std::vector<Rational> distinct;
    for (const auto& [r, m] : roots) {
      if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    }
    std::sort(distinct.begin(), distinct.end());
    REQUIRE(brackets.size() == distinct.size());
    for (std::size_t i = 0; i < brackets.size(); ++i) {
      CHECK(brackets[i].lo <= distinct[i]);
      CHECK(distinct[i] <= brackets[i].hi);
      CHECK(brackets[i].hi - brackets[i].lo <= Rational(1, 1000));
      if (i > 0) CHECK(brackets[i - 1].hi < brackets[i].lo);
    }
  }
}

TEST_CASE("the only real root of p_f matches the high-precision oracle") {
  const Polynomial pf{20812, 756, 1107, -216};
  const auto brackets = isolate_roots(pf, Region::ray(Rational(0)), Rational::parse("1e-15"));
  REQUIRE(brackets.size() == 1);
  const Rational oracle = Rational::parse("7.372446836517238342934");
  CHECK(brackets[0].lo <= oracle + Rational::parse("1e-15"));
  CHECK(oracle - Rational::parse("1e-15") <= brackets[0].hi);
  CHECK(isolate_roots(pf, Region::closed(Rational(-100), Rational(0))).empty());
}

TEST_CASE("sign certificates hold at sample points and fail with a real witness") {
  std::mt19937_64 rng(99);
  const std::array<SignClaim, 4> claims{SignClaim::NonNegative, SignClaim::Positive, SignClaim::NonPositive,
                                        SignClaim::Negative};
  int certified = 0, refuted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::pair<Rational, int>> roots;
    const Polynomial p = random_factored(rng, roots);
    Rational a = rand_rational(rng, 6), b = rand_rational(rng, 6);
    if (b < a) std::swap(a, b);
    const int kind = static_cast<int>(rng() % 4);
    const Region region = kind == 0   ? Region::closed(a, b)
                          : kind == 1 ? (a == b ? Region::point(a) : Region::open(a, b))
                          : kind == 2 ? Region::ray(a)
                                      : Region::point(a);
    const SignClaim claim = claims[rng() % 4];
    try {
      const SignCertificate cert = certify_sign_on_region(p, region, claim);
      ++certified;
      CHECK(recheck(p, cert));
      // Every sampled point of the region satisfies the claim.
      for (int k = 0; k <= 40; ++k) {
        Rational x = region.kind == Region::Kind::Ray ? region.lo + Rational(k) / Rational(3)
                                                      : region.lo + (region.hi - region.lo) * Rational(k, 40);
        if (!region.contains(x)) continue;
        CHECK(brute_sign_ok(claim, p, x));
      }
    } catch (const ClaimFalseError& e) {
      ++refuted;
      const RootBracket& w = e.witness();
      if (w.exact()) {
        CHECK(region.contains(w.lo));
        CHECK_FALSE(brute_sign_ok(claim, p, w.lo));
      } else {
        // a bracket around a root inside the region, where a strict claim fails
        INFO(p.str(), " on ", region.str(), " claim ", static_cast<int>(claim), " bracket ", w.lo.str(), " ", w.hi.str());
        CHECK((claim == SignClaim::Positive || claim == SignClaim::Negative));
        CHECK(count_roots_in(p, Region::closed(w.lo, w.hi)) >= 1);
      }
    }
  }
  CHECK(certified > 50);
  CHECK(refuted > 50);
}

TEST_CASE("a sign certificate for a different polynomial does not recheck") {
  const Polynomial pf{20812, 756, 1107, -216};
  const Rational u0 = Rational::parse("7.383");
  const SignCertificate cert = certify_sign_on_region(pf, Region::ray(u0), SignClaim::Negative);
  CHECK(recheck(pf, cert));
  CHECK_FALSE(recheck(Polynomial{20812, 756, 1107, 216}, cert));
  SignCertificate forged = cert;
  forged.claim = SignClaim::Positive;
  CHECK_FALSE(recheck(pf, forged));
  // p_f is positive just below its root, so the claim fails on a wider ray.
  CHECK_THROWS_AS(certify_sign_on_region(pf, Region::ray(Rational(7)), SignClaim::Negative), ClaimFalseError);
}

TEST_CASE("double roots of the transform are nonnegative but not positive") {
  const Polynomial f_hat{20812, 5940, -2781, 216};
  CHECK_NOTHROW(certify_sign_on_region(f_hat, Region::ray(Rational(0)), SignClaim::NonNegative));
  try {
    certify_sign_on_region(f_hat, Region::ray(Rational(0)), SignClaim::Positive);
    FAIL("expected a witness");
  } catch (const ClaimFalseError& e) {
    CHECK(e.witness().exact());
    CHECK(e.witness().lo == Rational(22, 3));
  }
}
