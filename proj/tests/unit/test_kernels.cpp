#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lpcert/error.hpp"
#include "lpcert/kernels.hpp"
#include "lpcert/radial.hpp"

using namespace lpcert;

namespace {

const Polynomial kPf{20812, 756, 1107, -216};
const Rational kWidth = Rational::parse("1e-12");

}  // namespace

TEST_CASE("parallel profile evaluation equals the serial reference") {
  std::vector<Interval> norms;
  for (int i = 0; i < 64; ++i) norms.emplace_back(Rational(i, 16));
  const auto serial = kernels::profile_at_norms(kPf, norms, kWidth, Execution::Serial);
  const auto parallel = kernels::profile_at_norms(kPf, norms, kWidth, Execution::Parallel);
  REQUIRE(serial.size() == norms.size());
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < norms.size(); ++i) {
    CHECK(serial[i] == eval_profile_at_norm(kPf, norms[i], kWidth));
  }
}

TEST_CASE("parallel range enclosures equal the serial reference") {
  std::vector<Interval> pieces;
  for (int i = 0; i < 100; ++i) pieces.emplace_back(Rational(i, 5), Rational(i + 1, 5));
  const auto serial = kernels::profile_ranges(kPf, pieces, kWidth, Execution::Serial);
  const auto parallel = kernels::profile_ranges(kPf, pieces, kWidth, Execution::Parallel);
  CHECK(serial == parallel);
}

TEST_CASE("weighted sums are reduced in index order") {
  const std::vector<Interval> terms{Interval(1), Interval(Rational(1, 3)), Interval(Rational(-1, 2), Rational(1, 2))};
  const std::vector<long> weights{2, 3, 4};
  CHECK(kernels::weighted_sum(terms, weights) == Interval(Rational(1), Rational(5)));
  const std::vector<long> short_weights{1};
  CHECK_THROWS_AS(kernels::weighted_sum(terms, short_weights), Error);
}

TEST_CASE("map_indexed rethrows the failure with the lowest index") {
  for (auto exec : {Execution::Serial, Execution::Parallel}) {
    try {
      kernels::map_indexed<int>(
          50,
          [](std::size_t i) -> int {
            if (i == 17 || i == 33) throw std::runtime_error("item " + std::to_string(i));
            return static_cast<int>(i);
          },
          exec);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "item 17");
    }
    const auto squares = kernels::map_indexed<long>(
        1000, [](std::size_t i) { return static_cast<long>(i * i); }, exec);
    CHECK(squares[999] == 998001);
  }
  CHECK(kernels::max_threads() >= 1);
}
