#include <random>

#include "doctest.h"
#include "lpcert/error.hpp"
#include "lpcert/polynomial.hpp"
#include "lpcert/rational.hpp"

using lpcert::Error;
using lpcert::ErrorCode;
using lpcert::Polynomial;
using lpcert::Rational;

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> cs;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) cs.push_back(Rational(coef(rng)) / Rational(den(rng)));
  return Polynomial(cs);
}

}  // namespace

TEST_CASE("decimal strings parse to exact rationals") {
  CHECK(Rational::parse("1.084") == Rational(271, 250));
  CHECK(Rational::parse("0.243") == Rational(243, 1000));
  CHECK(Rational::parse("1e-12") * Rational::parse("1e12") == Rational(1));
  CHECK(Rational::parse("-216/1") == Rational(-216));
  CHECK(Rational::parse("12/47") == Rational(24, 94));
  CHECK(Rational::parse("2.5E1") == Rational(25));
  CHECK(Rational::parse(" -0.5 ") == Rational(-1, 2));
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "--1", "1/", "e5"}) {
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("rationals serialize as num/den and round-trip") {
  CHECK(Rational(-216).str() == "-216/1");
  CHECK(Rational(271, 250).str() == "271/250");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = Rational(num(rng)) / Rational(den(rng));
    CHECK(Rational::parse(x.str()) == x);
  }
  CHECK(Rational(1, 3).decimal(5) == "0.33333");
  CHECK(Rational(-7, 4).decimal(2) == "-1.75");
}

TEST_CASE("field axioms hold on random rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational a = Rational(num(rng)) / Rational(den(rng));
    const Rational b = Rational(num(rng)) / Rational(den(rng));
    const Rational c = Rational(num(rng)) / Rational(den(rng));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("transform profiles factor exactly") {
  const Polynomial f_hat{20812, 5940, -2781, 216};
  CHECK(Polynomial{43, 24} * Polynomial{-22, 3} * Polynomial{-22, 3} == f_hat);
  const Polynomial g_hat{19649, -2233, -565, 69};
  CHECK(Polynomial{401, 69} * Polynomial{-7, 1} * Polynomial{-7, 1} == g_hat);
  CHECK(Polynomial{13, -1} * Polynomial{1075, 220, 69} == Polynomial{13975, 1785, 677, -69});
}

TEST_CASE("evaluation, derivative and composition") {
  const Polynomial p{20812, 756, 1107, -216};
  CHECK(p.evaluate(Rational(0)) == Rational(20812));
  CHECK(p.evaluate(Rational(1)) == Rational(20812 + 756 + 1107 - 216));
  CHECK(p.derivative() == Polynomial{756, 2214, -648});
  // p(2u + 1) at u = 3 equals p(7)
  CHECK(p.compose_affine(Rational(2), Rational(1)).evaluate(Rational(3)) == p.evaluate(Rational(7)));
  CHECK(Polynomial::from_root(Rational(22, 3), 2) == Polynomial{Rational(484, 9), Rational(-44, 3), 1});
}

TEST_CASE("division with remainder reconstructs the dividend") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Polynomial a = random_polynomial(rng, 8);
    const Polynomial b = random_polynomial(rng, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = lpcert::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd and squarefree decomposition") {
  const Polynomial a = Polynomial::from_root(Rational(1), 3) * Polynomial::from_root(Rational(-2, 5));
  const Polynomial b = Polynomial::from_root(Rational(1), 2) * Polynomial::from_root(Rational(4));
  CHECK(lpcert::proportional(lpcert::gcd(a, b), Polynomial::from_root(Rational(1), 2)));
  const Polynomial sf = lpcert::squarefree_part(a);
  CHECK(lpcert::proportional(sf, Polynomial::from_root(Rational(1)) * Polynomial::from_root(Rational(-2, 5))));
  // Only odd-multiplicity roots change sign.
  const Polynomial odd = lpcert::sign_changing_part(Polynomial::from_root(Rational(7), 2) * Polynomial{401, 69});
  CHECK(lpcert::proportional(odd, Polynomial{401, 69}));
}

TEST_CASE("primitive part and proportionality") {
  CHECK(lpcert::primitive_part(Polynomial{Rational(1, 2), Rational(3, 4)}) == Polynomial{2, 3});
  CHECK(lpcert::proportional(Polynomial{20812, 756, 1107, -216}, Polynomial{-41624, -1512, -2214, 432}));
  CHECK_FALSE(lpcert::proportional(Polynomial{20813, 756, 1107, -216}, Polynomial{20812, 756, 1107, -216}));
  CHECK_FALSE(lpcert::proportional(Polynomial{}, Polynomial{1}));
}
