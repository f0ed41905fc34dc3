#include "maxbounds/extremes.hpp"

#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "maxbounds/oracles.hpp"

using namespace maxbounds;

TEST_CASE("sub-Gaussian maximum upper bound") {
  CHECK(subgaussian_max_upper(1.0, 4.0) == 0.0);
  CHECK(subgaussian_max_upper(2.0, 1.0) == doctest::Approx(1.1774100225154747).epsilon(1e-12));
  CHECK(subgaussian_max_upper(2.0, 4.0) == doctest::Approx(2.3548200450309493).epsilon(1e-12));
  CHECK_THROWS_AS(subgaussian_max_upper(0.5, 1.0), std::domain_error);
}

TEST_CASE("threshold constants") {
  const double e_to_e = std::exp(std::exp(1.0));
  CHECK(threshold_constants(EnsembleSpec::gaussian(2.0, 1.0)).c_gaussian ==
        doctest::Approx(1.7485802085949032).epsilon(1e-12));
  CHECK(threshold_constants(EnsembleSpec::gaussian(e_to_e, 1.0)).c_gaussian ==
        doctest::Approx(std::sqrt(2.0 - 2.0 / std::exp(1.0))).epsilon(1e-12));
  const ThresholdConstants walk = threshold_constants(EnsembleSpec::walk(100, 8.0));
  REQUIRE(walk.c_walk.has_value());
  CHECK(*walk.c_walk >= 0.95);
  CHECK(*walk.c_walk <= 1.6);
  CHECK_THROWS_AS(threshold_constants(EnsembleSpec::gaussian(1.5, 1.0)), std::domain_error);
}

TEST_CASE("constant brackets over wide grids") {
  for (double ld = std::log(2.0); ld <= std::log(1e12) + 1e-9; ld += 0.1) {
    const double d = std::exp(ld);
    const ThresholdConstants c = threshold_constants(EnsembleSpec::gaussian(d, 1.0));
    CHECK(c.c_gaussian >= 1.1243);
    CHECK(c.c_gaussian <= 1.75);
  }
  // At d = 2 the walk constant reaches f(2) = 1.7486, matching the Gaussian
  // cap of 1.75; the [0.95, 1.6] bracket takes hold from d = 3 onward.
  CHECK(*threshold_constants(EnsembleSpec::walk(100, 2.0)).c_walk <= 1.75);
  for (std::int64_t n = 7; n <= 200; n += 3) {
    for (double d = 3.0; std::log(d) <= static_cast<double>(n) / 3.0 && d <= 1e12; d *= 3.0) {
      if (static_cast<double>(n) < std::log(d)) continue;
      const ThresholdConstants c = threshold_constants(EnsembleSpec::walk(n, d));
      REQUIRE(c.c_walk.has_value());
      CHECK(*c.c_walk >= 0.95);
      CHECK(*c.c_walk <= 1.6);
      // threshold lands strictly inside the corollary's t-range
      const double t = *c.c_walk * std::sqrt(static_cast<double>(n) * std::log(d)) / 2.0;
      CHECK(t > 1.0);
      CHECK(t < static_cast<double>(n) / 2.0 + 1.0);
    }
  }
}

TEST_CASE("Gaussian maximum lower bound") {
  CHECK(gaussian_max_lower(2.0, 1.0, BoundForm::Simplified) ==
        doctest::Approx(-0.5917679005494993).epsilon(1e-12));
  CHECK(gaussian_max_lower(1e6, 1.0, BoundForm::Primary) ==
        doctest::Approx(1.6517425627998850).epsilon(1e-10));
  CHECK(gaussian_max_lower(1e6, 1.0, BoundForm::Primary) > 0.0);
  for (BoundForm form : {BoundForm::Primary, BoundForm::Simplified}) {
    CHECK(gaussian_max_lower(50.0, 3.0, form) ==
          doctest::Approx(3.0 * gaussian_max_lower(50.0, 1.0, form)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gaussian_max_lower(1.5, 1.0, BoundForm::Primary), std::domain_error);
}

TEST_CASE("Gaussian primary form dominates simplified form") {
  for (double ld = std::log(2.0); ld <= std::log(1e12); ld += 0.05) {
    const double d = std::exp(ld);
    CHECK(gaussian_max_lower(d, 1.0, BoundForm::Primary) >=
          gaussian_max_lower(d, 1.0, BoundForm::Simplified) - 1e-12);
  }
}

TEST_CASE("walk maximum lower bound") {
  CHECK(walk_max_lower(100, 8.0, BoundForm::Simplified) ==
        doctest::Approx(-18.702175802059205).epsilon(1e-12));
  const double big_d = std::exp(30.0);
  CHECK(walk_max_lower(90, big_d, BoundForm::Primary) ==
        doctest::Approx(17.579680462449362).epsilon(1e-9));
  CHECK(walk_max_lower(90, big_d, BoundForm::Primary) > 0.0);
  CHECK_THROWS_AS(walk_max_lower(7, 1.5, BoundForm::Primary), std::domain_error);
  CHECK_THROWS_AS(walk_max_lower(6, 4.0, BoundForm::Primary), std::domain_error);
  CHECK_THROWS_AS(walk_max_lower(9, 25.0, BoundForm::Primary), std::domain_error);  // d > e^3

  for (std::int64_t n : {7, 20, 60, 200}) {
    for (double d = 2.0; std::log(d) <= static_cast<double>(n) / 3.0; d *= 2.0) {
      CHECK(walk_max_lower(n, d, BoundForm::Primary) >=
            walk_max_lower(n, d, BoundForm::Simplified) - 1e-12);
    }
  }
}

TEST_CASE("experts regret bounds") {
  const auto [lower, upper] = experts_regret_bounds(90, std::exp(30.0));
  CHECK(lower == doctest::Approx(0.5 * walk_max_lower(90, std::exp(30.0), BoundForm::Primary))
                     .epsilon(1e-15));
  CHECK(lower == doctest::Approx(8.789840231224681).epsilon(1e-9));
  CHECK(experts_regret_upper(100, 10.0) == doctest::Approx(10.729830131446736).epsilon(1e-12));
  for (std::int64_t n : {7, 20, 50, 100}) {
    for (double d = 2.0; std::log(d) <= static_cast<double>(n) / 3.0; d *= 2.0) {
      const auto [lo, hi] = experts_regret_bounds(n, d);
      CHECK(lo <= hi);
    }
  }
}

TEST_CASE("bracket assembly") {
  const BoundBracket g = make_bracket(EnsembleSpec::gaussian(2.0, 1.0), 0.5641895835477563);
  REQUIRE(g.lower_primary.has_value());
  CHECK(g.upper == doctest::Approx(1.1774100225154747).epsilon(1e-12));
  CHECK(*g.lower_primary < 0.0);
  CHECK(g.lower_ok);
  CHECK(g.upper_ok);
  CHECK(g.vacuous);

  const BoundBracket short_walk = make_bracket(EnsembleSpec::walk(2, 2.0), 0.75);
  CHECK_FALSE(short_walk.lower_primary.has_value());
  CHECK(short_walk.upper_ok);

  const BoundBracket big_walk =
      make_bracket(EnsembleSpec::walk(90, std::exp(30.0)), walk_max_exact(90, std::exp(30.0)));
  REQUIRE(big_walk.lower_primary.has_value());
  CHECK(*big_walk.lower_primary == doctest::Approx(17.579680462449362).epsilon(1e-9));
  CHECK(big_walk.upper == doctest::Approx(73.48469228349535).epsilon(1e-12));
  CHECK(big_walk.lower_ok);
  CHECK(big_walk.upper_ok);
  CHECK_FALSE(big_walk.vacuous);
}
