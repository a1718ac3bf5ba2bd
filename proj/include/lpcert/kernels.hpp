#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "lpcert/interval.hpp"

namespace lpcert {

/// Serial runs the reference loop; Parallel runs the same body under OpenMP.
/// Both produce identical results: work items are independent and results are
/// written by index, then reduced in index order.
enum class Execution { Serial, Parallel };

namespace kernels {

/// out[i] = body(i) for i in [0, n). Exceptions are rethrown for the lowest failing index.
template <class T, class Body>
std::vector<T> map_indexed(std::size_t n, Body&& body, Execution exec) {
  std::vector<T> out(n);
  if (exec == Execution::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = body(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = body(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Enclosures of u -> p(u) e^{-u/2} at u = 2 pi * norms[i].
std::vector<Interval> profile_at_norms(const Polynomial& p, std::span<const Interval> norms,
                                       const Rational& width, Execution exec);

/// Range enclosures of u -> p(u) e^{-u/2} over each u-piece.
std::vector<Interval> profile_ranges(const Polynomial& p, std::span<const Interval> pieces,
                                     const Rational& width, Execution exec);

/// Sum of weights[i] * terms[i] in index order.
Interval weighted_sum(std::span<const Interval> terms, std::span<const long> weights);

int max_threads();

}  // namespace kernels
}  // namespace lpcert
