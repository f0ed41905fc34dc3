#include "maxbounds/extremes.hpp"

#include <cmath>
#include <stdexcept>

#include "maxbounds/analytic.hpp"

namespace maxbounds {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.5066282746310005024;

double f_of_d(double d) {
  const double ld = std::log(d);
  return std::sqrt(2.0 - 2.0 * std::log(ld) / ld);
}

void validate(const EnsembleSpec& spec) {
  if (!(spec.d >= 1.0)) throw std::domain_error("EnsembleSpec: requires d >= 1");
  if (spec.family == Family::Gaussian) {
    if (!(spec.sigma > 0.0)) throw std::domain_error("EnsembleSpec: gaussian requires sigma > 0");
  } else {
    if (spec.n < 1) throw std::domain_error("EnsembleSpec: walk requires n >= 1");
  }
}
}  // namespace

double subgaussian_max_upper(double d, double variance) {
  if (!(d >= 1.0)) throw std::domain_error("subgaussian_max_upper: requires d >= 1");
  if (!(variance >= 0.0)) throw std::domain_error("subgaussian_max_upper: requires variance >= 0");
  return std::sqrt(variance) * std::sqrt(2.0 * std::log(d));
}

ThresholdConstants threshold_constants(const EnsembleSpec& spec) {
  validate(spec);
  if (!(spec.d >= 2.0)) throw std::domain_error("threshold_constants: requires d >= 2");
  ThresholdConstants c;
  c.f = f_of_d(spec.d);
  c.c_gaussian = c.f;
  if (spec.family == Family::Walk) {
    const double arg =
        1.6 * std::sqrt(std::log(spec.d)) / (2.0 * std::sqrt(static_cast<double>(spec.n)));
    c.psi_arg = arg;
    c.c_walk = c.f / std::sqrt(psi(arg));
  }
  return c;
}

double gaussian_max_lower(double d, double sigma, BoundForm form) {
  if (!(d >= 2.0)) throw std::domain_error("gaussian_max_lower: requires d >= 2");
  if (!(sigma > 0.0)) throw std::domain_error("gaussian_max_lower: requires sigma > 0");
  const double ld = std::log(d);
  if (form == BoundForm::Simplified) return 0.13 * sigma * std::sqrt(ld) - 0.7 * sigma;
  const double sqrt_2_over_pi = std::sqrt(2.0 / kPi);
  return sigma * (1.0 - std::exp(-std::sqrt(ld) / 6.35)) *
             (std::sqrt(2.0 * ld - 2.0 * std::log(ld)) + sqrt_2_over_pi) -
         sqrt_2_over_pi * sigma;
}

double walk_max_lower(std::int64_t n, double d, BoundForm form) {
  if (n < 7) throw std::domain_error("walk_max_lower: hypothesis n >= 7 violated");
  if (!(d >= 2.0)) throw std::domain_error("walk_max_lower: hypothesis d >= 2 violated");
  const double nd = static_cast<double>(n);
  // Compare in log space: d <= exp(n/3) without overflowing exp.
  if (std::log(d) > nd / 3.0)
    throw std::domain_error("walk_max_lower: hypothesis d <= exp(n/3) violated");
  const double ld = std::log(d);
  if (form == BoundForm::Simplified) return 0.09 * std::sqrt(nd * ld) - 2.0 * std::sqrt(nd);
  const double correction = psi(1.6 * std::sqrt(ld) / (2.0 * std::sqrt(nd)));
  return (1.0 - std::exp(-std::sqrt(ld) / (3.1 * kSqrt2Pi))) / std::sqrt(correction) *
             std::sqrt(nd) * (std::sqrt(2.0 * ld - 2.0 * std::log(ld)) - 1.0) -
         std::sqrt(nd);
}

double experts_regret_upper(std::int64_t n, double d) {
  if (n < 1) throw std::domain_error("experts_regret_upper: requires n >= 1");
  if (!(d >= 2.0)) throw std::domain_error("experts_regret_upper: requires d >= 2");
  return std::sqrt(0.5 * static_cast<double>(n) * std::log(d));
}

std::pair<double, double> experts_regret_bounds(std::int64_t n, double d) {
  return {0.5 * walk_max_lower(n, d, BoundForm::Primary), experts_regret_upper(n, d)};
}

bool lower_bound_in_scope(const EnsembleSpec& spec) {
  validate(spec);
  if (spec.family == Family::Gaussian) return spec.d >= 2.0;
  return spec.n >= 7 && spec.d >= 2.0 &&
         std::log(spec.d) <= static_cast<double>(spec.n) / 3.0;
}

BoundBracket make_bracket(const EnsembleSpec& spec, double exact, double slack) {
  validate(spec);
  BoundBracket b;
  b.spec = spec;
  b.exact = exact;
  if (spec.family == Family::Gaussian) {
    b.upper = subgaussian_max_upper(spec.d, spec.sigma * spec.sigma);
    if (lower_bound_in_scope(spec)) {
      b.lower_primary = gaussian_max_lower(spec.d, spec.sigma, BoundForm::Primary);
      b.lower_simplified = gaussian_max_lower(spec.d, spec.sigma, BoundForm::Simplified);
    }
  } else {
    b.upper = subgaussian_max_upper(spec.d, static_cast<double>(spec.n));
    if (lower_bound_in_scope(spec)) {
      b.lower_primary = walk_max_lower(spec.n, spec.d, BoundForm::Primary);
      b.lower_simplified = walk_max_lower(spec.n, spec.d, BoundForm::Simplified);
    }
  }
  b.upper_ok = exact <= b.upper + slack;
  if (b.lower_primary) {
    const double lo = std::max(*b.lower_primary, *b.lower_simplified);
    b.lower_ok = lo <= exact + slack;
    b.vacuous = b.lower_ok && b.upper_ok && *b.lower_primary < 0.0 && *b.lower_simplified < 0.0;
  }
  return b;
}

}  // namespace maxbounds
