#include "maxbounds/tails.hpp"

#include <cmath>
#include <cstdint>
#include <doctest.h>
#include <stdexcept>
#include <vector>

#include "maxbounds/analytic.hpp"

using namespace maxbounds;

namespace {

// Exact rational tail Pr[B >= k] via Pascal's triangle in exact doubles
// (binomial coefficients through n = 30 are below 2^53).
double tail_by_enumeration(std::int64_t n, std::int64_t k) {
  std::vector<double> row{1.0};
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<double> next(static_cast<std::size_t>(i) + 1, 0.0);
    for (std::int64_t j = 0; j < i; ++j) {
      next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j) + 1] += row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  double count = 0.0;
  for (std::int64_t j = std::max<std::int64_t>(k, 0); j <= n; ++j)
    count += row[static_cast<std::size_t>(j)];
  return count * std::pow(0.5, static_cast<double>(n));
}

}  // namespace

TEST_CASE("Gaussian tail lower bound") {
  CHECK(gaussian_tail_lower(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gaussian_tail_lower(1.0, 1.0) == doctest::Approx(0.13458635209097554).epsilon(1e-12));
  CHECK(gaussian_tail_lower(2.0, 2.0) == gaussian_tail_lower(1.0, 1.0));
  CHECK_THROWS_AS(gaussian_tail_lower(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(gaussian_tail_lower(1.0, 0.0), std::domain_error);

  // dominance and scale invariance on an x/sigma grid (power-of-two scale
  // factor so x/sigma is bit-identical after rescaling)
  for (double z = 0.0; z <= 8.0; z += 0.05) {
    CHECK(gaussian_tail_lower(z, 1.0) <= std_normal_survival(z) + 1e-12);
    CHECK(gaussian_tail_lower(4.0 * z, 4.0) == gaussian_tail_lower(z, 1.0));
    CHECK(gaussian_tail_lower(2.5 * z, 2.5) ==
          doctest::Approx(gaussian_tail_lower(z, 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("exact binomial tail values") {
  CHECK(binomial_tail_exact(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(binomial_tail_exact(4, 3) == doctest::Approx(0.3125).epsilon(1e-14));
  CHECK(binomial_tail_exact(2, 1) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(binomial_tail_exact(10, 0) == 1.0);
  CHECK(binomial_tail_exact(10, -3) == 1.0);
  CHECK(binomial_tail_exact(10, 11) == 0.0);
}

TEST_CASE("exact tail agrees with rational enumeration through n = 30") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const double expected = tail_by_enumeration(n, k);
      CHECK(binomial_tail_exact(n, k) == doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("survival table matches single queries") {
  const std::vector<double> table = binomial_survival_table(25);
  for (std::int64_t k = 0; k <= 26; ++k)
    CHECK(table[static_cast<std::size_t>(k)] ==
          doctest::Approx(binomial_tail_exact(25, k)).epsilon(1e-14));
}

TEST_CASE("binomial tail lower bound values") {
  CHECK(binomial_tail_lower(4, 3, BinomialLowerMode::McKay) ==
        doctest::Approx(0.24587982840704943).epsilon(1e-12));
  CHECK(binomial_tail_lower(4, 3, BinomialLowerMode::Stirling) ==
        doctest::Approx(0.13121258885447711).epsilon(1e-12));
  CHECK(binomial_tail_lower(3, 3, BinomialLowerMode::Stirling) ==
        doctest::Approx(0.019742370227051476).epsilon(1e-10));
  CHECK(binomial_tail_lower(3, 3, BinomialLowerMode::Stirling) <= 0.125);
  CHECK_THROWS_AS(binomial_tail_lower(4, 1, BinomialLowerMode::McKay), std::domain_error);
  // real-valued hypothesis check: k = 2 is allowed for n = 4 (k >= n/2)
  CHECK_NOTHROW(binomial_tail_lower(4, 2, BinomialLowerMode::McKay));
}

TEST_CASE("tail lower bound dominance over n <= 60") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = (n + 1) / 2; k <= n; ++k) {
      const double exact = binomial_tail_exact(n, k);
      CHECK(binomial_tail_lower(n, k, BinomialLowerMode::McKay) <= exact + 1e-12);
      CHECK(binomial_tail_lower(n, k, BinomialLowerMode::Stirling) <= exact + 1e-12);
    }
  }
}

TEST_CASE("corollary bound values and dominance") {
  CHECK(binomial_tail_corollary(4, 1.0) ==
        doctest::Approx(0.11130689494825284).epsilon(1e-12));
  CHECK(binomial_tail_exact(4, 2) == doctest::Approx(0.6875).epsilon(1e-14));
  for (std::int64_t n : {7, 8}) {
    const auto k = static_cast<std::int64_t>(std::ceil(static_cast<double>(n) / 2.0));
    CHECK(binomial_tail_corollary(n, 1.0) <= binomial_tail_exact(n, k) + 1e-12);
  }
  // upper-boundary t = n/2 + 1 targets Pr[B >= n]
  CHECK(binomial_tail_corollary(4, 3.0) <= 0.0625);
  CHECK_THROWS_AS(binomial_tail_corollary(4, 0.5), std::domain_error);
  CHECK_THROWS_AS(binomial_tail_corollary(4, 3.5), std::domain_error);
}

TEST_CASE("corollary dominance over t grids") {
  for (std::int64_t n = 7; n <= 60; ++n) {
    const double t_max = static_cast<double>(n) / 2.0 + 1.0;
    for (double t = 1.0; t <= t_max + 1e-12; t += 0.5) {
      const auto k = static_cast<std::int64_t>(
          std::ceil(static_cast<double>(n) / 2.0 + t - 1.0 - 1e-12));
      CHECK(binomial_tail_corollary(n, std::min(t, t_max)) <=
            binomial_tail_exact(n, k) + 1e-12);
    }
  }
}
