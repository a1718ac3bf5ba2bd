#include "lpcert/elementary.hpp"

#include <map>
#include <mutex>

#include "lpcert/error.hpp"

namespace lpcert {

namespace {

constexpr long kMaxBits = 1L << 15;

// Enclosure of arctan(1/x) with the alternating tail below 2^-tail_bits.
Interval arctan_inverse(long x, long tail_bits, long max_terms) {
  const Rational x2 = Rational(x) * Rational(x);
  const Rational limit = pow2(-tail_bits);
  Rational power = Rational(1) / Rational(x);  // 1 / x^(2k+1)
  Rational sum;
  for (long k = 0; k < max_terms; ++k) {
    const Rational term = power / Rational(2 * k + 1);
    if (term <= limit) {
      // S_k and S_{k+1} bracket the limit.
      const Rational next = (k % 2 == 0) ? sum + term : sum - term;
      return hull(Interval(sum), Interval(next));
    }
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power /= x2;
  }
  throw Error(ErrorCode::PrecisionUnreachable, "arctan series exceeded its term cap");
}

Interval pi_at_bits(long k, long max_terms) {
  static std::mutex mutex;
  static std::map<long, Interval> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  // 16*A - 4*B, each tail small enough that the total width stays within 6 * 2^-k.
  const Interval a = arctan_inverse(5, k + 3, max_terms);
  const Interval b = arctan_inverse(239, k + 1, max_terms);
  Interval pi = simplify(Interval(Rational(16)) * a - Interval(Rational(4)) * b, k);
  std::lock_guard lock(mutex);
  cache.emplace(k, pi);
  return pi;
}

// exp(q) for q >= 0, all partial sums kept as outward-rounded pairs.
Interval exp_nonnegative(const Rational& q, long bits) {
  if (q.is_zero()) return Interval(Rational(1));
  long halvings = 0;
  Rational y = q;
  while (y > Rational(1, 2)) {
    y /= Rational(2);
    ++halvings;
  }
  const long wp = bits + halvings + 16;
  const Rational limit = pow2(-(wp + 2));
  Rational term_lo(1);
  Rational term_hi(1);
  Rational sum_lo(1);
  Rational sum_hi(1);
  for (long k = 1;; ++k) {
    term_lo = round_dyadic(term_lo * y / Rational(k), wp + 8, -1);
    term_hi = round_dyadic(term_hi * y / Rational(k), wp + 8, +1);
    // Remainder after terms 0..k-1 is e^xi y^k / k! <= 2 * term_k since y <= 1/2.
    if (term_hi <= limit) {
      sum_hi += Rational(2) * term_hi;
      break;
    }
    sum_lo += term_lo;
    sum_hi += term_hi;
    if (k > 100000) throw Error(ErrorCode::PrecisionUnreachable, "exp series exceeded its term cap");
  }
  Interval base(sum_lo, sum_hi);
  for (long i = 0; i < halvings; ++i) base = simplify(sqr(base), wp);
  return base;
}

Interval exp_point(const Rational& q, long bits) {
  if (q.sign() >= 0) return exp_nonnegative(q, bits);
  const Interval r = exp_nonnegative(-q, bits + 4);
  return simplify(Interval(Rational(1) / r.hi(), Rational(1) / r.lo()), bits + 4);
}

// cos(q) for a rational point: reduce by 2*pi*j, then Taylor at the (rounded) midpoint.
Interval cos_point(const Rational& q, long bits) {
  const Rational two_pi_approx(Integer(710), Integer(113));
  const Integer j = floor(q / two_pi_approx + Rational(1, 2));
  const long j_bits = static_cast<long>(mpz_sizeinbase(j.get_mpz_t(), 2));
  const Interval pi = pi_at_bits(bits + j_bits + 6, 1L << 20);
  const Interval y = Interval(q) - Interval(Rational(2) * Rational(j)) * pi;
  const long wp = bits + 16;
  const Rational m = round_dyadic(y.mid(), wp, -1);
  // |cos'| <= 1, so cos(y) lies within |y - m| of cos(m).
  const Rational lipschitz = std::max(abs(y.hi() - m), abs(y.lo() - m));
  const Rational am = abs(m);
  const Interval z = simplify(Interval(m * m), wp);
  // Taylor polynomial in z = m^2 with Lagrange remainder |m|^(2N) / (2N)!.
  std::vector<Rational> coeffs;
  Rational fact(1);
  Rational tail(1);  // |m|^(2N) / (2N)!
  for (long i = 0;; ++i) {
    coeffs.push_back((i % 2 == 0 ? Rational(1) : Rational(-1)) / fact);
    fact *= Rational(2 * i + 1) * Rational(2 * i + 2);
    tail = round_dyadic(tail * am * am / (Rational(2 * i + 1) * Rational(2 * i + 2)), wp + 8, +1);
    if (i > 2 && tail <= pow2(-(wp + 2))) break;
    if (i > 100000) throw Error(ErrorCode::PrecisionUnreachable, "cos series exceeded its term cap");
  }
  Interval value = evaluate(Polynomial(std::move(coeffs)), z, wp + 4);
  value += Interval(-(tail + lipschitz), tail + lipschitz);
  const Interval unit(Rational(-1), Rational(1));
  return simplify(intersect(value, unit), bits + 4);
}

}  // namespace

Interval enclose_pi(const Rational& target_width, long max_terms) {
  const long k = bits_for_width(target_width) + 3;
  return pi_at_bits(k, max_terms);
}

Interval enclose_exp(const Interval& x, const Rational& target_width) {
  const Rational half = target_width / Rational(2);
  for (long bits = bits_for_width(target_width) + 8; bits <= kMaxBits; bits += 32 + bits / 2) {
    const Interval e_lo = exp_point(x.lo(), bits);
    const Interval e_hi = x.is_point() ? e_lo : exp_point(x.hi(), bits);
    if (e_lo.width() <= half && e_hi.width() <= half) return {e_lo.lo(), e_hi.hi()};
  }
  throw Error(ErrorCode::PrecisionUnreachable, "exp enclosure of " + x.decimal(6) + " needs more than the bit cap");
}

Interval enclose_cos(const Interval& x, const Rational& target_width) {
  const Interval unit(Rational(-1), Rational(1));
  if (x.width() >= Rational(7)) return unit;
  const Rational half = target_width / Rational(2);
  for (long bits = bits_for_width(target_width) + 4; bits <= kMaxBits; bits += 32 + bits / 2) {
    const Interval c_lo = cos_point(x.lo(), bits);
    const Interval c_hi = x.is_point() ? c_lo : cos_point(x.hi(), bits);
    if (c_lo.width() > half || c_hi.width() > half) continue;
    Interval result = hull(c_lo, c_hi);
    if (!x.is_point()) {
      // Fold in cos(j*pi) = (-1)^j for every multiple of pi that may lie in x.
      const Interval pi = enclose_pi(Rational(1, 1 << 20));
      const Integer first = floor(x.lo() / pi.hi()) - 1;
      const Integer last = ceil(x.hi() / pi.lo()) + 1;
      for (Integer j = first; j <= last; ++j) {
        const Interval jpi = Interval(Rational(j)) * pi;
        if (jpi.intersects(x)) {
          result = hull(result, Interval(mpz_even_p(j.get_mpz_t()) ? Rational(1) : Rational(-1)));
        }
      }
    }
    return intersect(result, unit);
  }
  throw Error(ErrorCode::PrecisionUnreachable, "cos enclosure of " + x.decimal(6) + " needs more than the bit cap");
}

Rational exp_lower_by_truncation(const Rational& q, int terms) {
  if (q.sign() < 0) {
    // exp(q) = 1 / exp(|q|) >= 1 / (partial sum + geometric bound on the remainder).
    const Rational a = -q;
    Rational sum;
    Rational term(1);
    int k = 0;
    for (; k < terms || Rational(k + 1) <= a * Rational(2); ++k) {
      sum += term;
      term = term * a / Rational(k + 1);
    }
    // remaining terms: term * (1 + a/(k+1) + ...) <= term / (1 - a/(k+1)) <= 2 term
    return Rational(1) / (sum + term * Rational(2));
  }
  Rational sum;
  Rational term(1);
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term = term * q / Rational(k + 1);
  }
  return sum;
}

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::True: return "true";
    case Decision::False: return "false";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "";
}

StrictComparison certify_less(const Enclosure& lhs, const Enclosure& rhs, const Rational& width, int max_refine) {
  StrictComparison out;
  Rational w = width;
  for (int round = 0; round <= max_refine; ++round, w *= pow2(-32)) {
    out.lhs = lhs(w);
    out.rhs = rhs(w);
    out.width_used = w;
    if (out.lhs.certainly_less(out.rhs)) {
      out.decision = Decision::True;
      return out;
    }
    if (out.lhs.lo() >= out.rhs.hi()) {
      out.decision = Decision::False;
      return out;
    }
  }
  out.decision = Decision::Inconclusive;
  return out;
}

}  // namespace lpcert
