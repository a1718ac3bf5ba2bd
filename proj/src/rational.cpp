#include "lpcert/rational.hpp"

#include <cctype>
#include <string>

#include "lpcert/error.hpp"

namespace lpcert {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Precondition: return "PreconditionViolated";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ClaimFalse: return "ClaimFalse";
    case ErrorCode::DivisionByIntervalContainingZero: return "DivisionByIntervalContainingZero";
    case ErrorCode::SqrtOfNegative: return "SqrtOfNegative";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::Overdetermined: return "Overdetermined";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::DegenerateConstraint: return "DegenerateConstraint";
    case ErrorCode::UnverifiedCertificate: return "UnverifiedCertificate";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::BoundTooLargeForBudget: return "BoundTooLargeForBudget";
    case ErrorCode::TailBoundDiverges: return "TailBoundDiverges";
    case ErrorCode::StepFalsified: return "StepFalsified";
    case ErrorCode::Inconclusive: return "Inconclusive";
  }
  return "Error";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::Precondition, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::Parse, "bad rational '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error(ErrorCode::Parse, "bad rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw Error(ErrorCode::Parse, "bad rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Integer ex = parse_integer(text.substr(e + 1), text);
    if (!ex.fits_slong_p() || abs(ex) > 100000) throw Error(ErrorCode::Parse, "exponent out of range");
    exponent = ex.get_si();
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    i = 1;
  }
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < mantissa.size(); ++i) {
    const char c = mantissa[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw Error(ErrorCode::Parse, "bad rational '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw Error(ErrorCode::Parse, "bad rational '" + std::string(text) + "'");
  Integer num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - frac_digits;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? Rational(Integer(num * scale)) : Rational(num, scale);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = abs(value_.get_num()) * scale / value_.get_den();  // truncation
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (sign() < 0 ? "-" : "") + s;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, int exponent) {
  if (exponent < 0) return Rational(1) / pow(x, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), x.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
  return q;
}

Rational pow2(long k) {
  Integer p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(Integer(1), p);
}

long bits_for_width(const Rational& width) {
  if (width.sign() <= 0) throw Error(ErrorCode::Precondition, "width must be positive");
  // 2^-k <= w  <=>  den <= w_num * 2^k
  long k = static_cast<long>(mpz_sizeinbase(width.value().get_den_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(width.value().get_num_mpz_t(), 2)) - 1;
  if (k < 0) k = 0;
  while (pow2(-k) > width) ++k;
  return k;
}

Rational round_dyadic(const Rational& x, long bits, int dir) {
  Integer scaled_num = x.numerator();
  Integer den = x.denominator();
  if (bits >= 0) {
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-bits));
  }
  Integer q;
  if (dir < 0) {
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  }
  return Rational(q) * pow2(-bits);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::SqrtOfNegative, "integer square root of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace lpcert
