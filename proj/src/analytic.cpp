#include "maxbounds/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace maxbounds {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string(what) + " must be finite");
}
}  // namespace

double std_normal_pdf(double x) {
  require_finite(x, "std_normal_pdf: x");
  return std::exp(-0.5 * x * x) / kSqrt2Pi;
}

double std_normal_survival(double x) {
  require_finite(x, "std_normal_survival: x");
  return 0.5 * std::erfc(x * kInvSqrt2);
}

double mills_ratio(double x, MillsMode mode) {
  require_finite(x, "mills_ratio: x");
  if (x < 0.0) throw std::domain_error("mills_ratio: requires x >= 0");
  switch (mode) {
    case MillsMode::Exact:
      return std_normal_survival(x) / std_normal_pdf(x);
    case MillsMode::Boyd:
      return kPi / ((kPi - 1.0) * x + std::sqrt(x * x + 2.0 * kPi));
    case MillsMode::BoydSimplified:
      return kPi / (kPi * x + kSqrt2Pi);
  }
  throw std::logic_error("mills_ratio: unknown mode");
}

FactorialBracket factorial_bounds(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorial_bounds: requires n >= 1");
  const double nd = static_cast<double>(n);
  // Evaluate (n/e)^n in log space; direct powers overflow past n ~ 170.
  const double lower = std::exp(0.5 * std::log(2.0 * kPi * nd) + nd * (std::log(nd) - 1.0));
  return FactorialBracket{n, lower, std::exp(1.0 / 12.0) * lower};
}

double kl_bernoulli(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("kl_bernoulli: p must be in [0,1]");
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("kl_bernoulli: q must be in [0,1]");
  if (q == 0.0 || q == 1.0) {
    return p == q ? 0.0 : std::numeric_limits<double>::infinity();
  }
  double div = 0.0;
  if (p > 0.0) div += p * std::log(p / q);
  if (p < 1.0) div += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  return div;
}

double psi(double x) {
  if (!(std::fabs(x) <= 0.5)) throw std::domain_error("psi: requires |x| <= 1/2");
  const double ax = std::fabs(x);
  if (ax < 1e-3) {
    // D(1/2+x || 1/2) = sum_{k>=1} (2x)^{2k} / (2k(2k-1)), so
    // psi(x) = 1 + (2/3)x^2 + (16/15)x^4 + O(x^6); truncation error at the
    // switchover is ~1e-18, well below the direct ratio's noise there.
    const double x2 = x * x;
    return 1.0 + x2 * (2.0 / 3.0 + x2 * (16.0 / 15.0));
  }
  // D(1/2+x || 1/2) = (1/2+x) ln(1+2x) + (1/2-x) ln(1-2x)
  double div = (0.5 + ax) * std::log1p(2.0 * ax);
  if (ax < 0.5) div += (0.5 - ax) * std::log1p(-2.0 * ax);
  return div / (2.0 * ax * ax);
}

double sub_gaussian_mgf_margin(MgfKind kind, double s, double sigma) {
  require_finite(s, "sub_gaussian_mgf_margin: s");
  switch (kind) {
    case MgfKind::Rademacher:
      return std::exp(0.5 * s * s) - std::cosh(s);
    case MgfKind::Gaussian:
      if (!(sigma > 0.0)) throw std::domain_error("sub_gaussian_mgf_margin: sigma must be > 0");
      // E[exp(sX)] = exp(sigma^2 s^2 / 2) exactly, so the margin is zero;
      // subtracting the two exponentials would produce inf - inf once
      // sigma^2 s^2 / 2 overflows.
      return 0.0;
  }
  throw std::logic_error("sub_gaussian_mgf_margin: unknown kind");
}

}  // namespace maxbounds
