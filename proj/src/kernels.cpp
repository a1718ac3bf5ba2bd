#include "lpcert/kernels.hpp"

#include <omp.h>

#include "lpcert/error.hpp"
#include "lpcert/radial.hpp"

namespace lpcert::kernels {

std::vector<Interval> profile_at_norms(const Polynomial& p, std::span<const Interval> norms, const Rational& width,
                                       Execution exec) {
  return map_indexed<Interval>(
      norms.size(), [&](std::size_t i) { return eval_profile_at_norm(p, norms[i], width); }, exec);
}

std::vector<Interval> profile_ranges(const Polynomial& p, std::span<const Interval> pieces, const Rational& width,
                                     Execution exec) {
  return map_indexed<Interval>(
      pieces.size(), [&](std::size_t i) { return profile_range(p, pieces[i], width); }, exec);
}

Interval weighted_sum(std::span<const Interval> terms, std::span<const long> weights) {
  if (terms.size() != weights.size()) throw Error(ErrorCode::Precondition, "terms and weights differ in length");
  Interval sum(Rational(0));
  for (std::size_t i = 0; i < terms.size(); ++i) sum += Interval(Rational(weights[i])) * terms[i];
  return sum;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace lpcert::kernels
