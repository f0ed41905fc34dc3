#include "maxbounds/tails.hpp"

#include <cmath>
#include <stdexcept>

#include "maxbounds/analytic.hpp"

namespace maxbounds {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kLn2 = 0.69314718055994530942;

// log Pr[B = k] for B ~ Binomial(n, 1/2)
double log_pmf(std::int64_t n, std::int64_t k) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0) -
         nd * kLn2;
}
}  // namespace

double gaussian_tail_lower(double x, double sigma) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("gaussian_tail_lower: requires x >= 0");
  if (!(sigma > 0.0)) throw std::domain_error("gaussian_tail_lower: requires sigma > 0");
  const double z = x / sigma;
  return std::exp(-0.5 * z * z) / (kSqrt2Pi * z + 2.0);
}

double binomial_tail_exact(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::domain_error("binomial_tail_exact: requires n >= 1");
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  // Kahan sum from j = n downward: terms grow toward the mode, so the small
  // outer-tail terms are absorbed before the large ones.
  double sum = 0.0, comp = 0.0;
  for (std::int64_t j = n; j >= k; --j) {
    const double term = std::exp(log_pmf(n, j));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum < 1.0 ? sum : 1.0;
}

std::vector<double> binomial_survival_table(std::int64_t n) {
  if (n < 1) throw std::domain_error("binomial_survival_table: requires n >= 1");
  std::vector<double> surv(static_cast<std::size_t>(n) + 2, 0.0);
  double sum = 0.0, comp = 0.0;
  for (std::int64_t k = n; k >= 0; --k) {
    const double term = std::exp(log_pmf(n, k));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    surv[static_cast<std::size_t>(k)] = sum < 1.0 ? sum : 1.0;
  }
  return surv;
}

double binomial_tail_lower(std::int64_t n, std::int64_t k, BinomialLowerMode mode) {
  if (n < 1) throw std::domain_error("binomial_tail_lower: requires n >= 1");
  // Real comparison, per the hypothesis n/2 <= k <= n.
  if (2 * k < n || k > n) throw std::domain_error("binomial_tail_lower: requires n/2 <= k <= n");
  const double nd = static_cast<double>(n);
  const double x = (2.0 * static_cast<double>(k) - nd) / std::sqrt(nd);
  const double mills = mills_ratio(x, MillsMode::Exact);
  switch (mode) {
    case BinomialLowerMode::McKay: {
      // sqrt(n) C(n-1, k-1) 2^-n in log space
      const double kd = static_cast<double>(k);
      const double log_coeff = 0.5 * std::log(nd) + std::lgamma(nd) - std::lgamma(kd) -
                               std::lgamma(nd - kd + 1.0) - nd * kLn2;
      return std::exp(log_coeff) * mills;
    }
    case BinomialLowerMode::Stirling: {
      const double div = kl_bernoulli(static_cast<double>(k) / nd, 0.5);
      return std::exp(-nd * div - 1.0 / 6.0) / kSqrt2Pi * mills;
    }
  }
  throw std::logic_error("binomial_tail_lower: unknown mode");
}

double binomial_tail_corollary(std::int64_t n, double t) {
  if (n < 1) throw std::domain_error("binomial_tail_corollary: requires n >= 1");
  if (!(t >= 1.0 && t <= 0.5 * static_cast<double>(n) + 1.0))
    throw std::domain_error("binomial_tail_corollary: requires t in [1, n/2 + 1]");
  const double nd = static_cast<double>(n);
  const double arg = std::min(t / nd, 0.5);
  const double correction = psi(arg);
  return std::exp(-1.0 / 6.0 - 2.0 * correction * t * t / nd) /
         (kSqrt2Pi * 2.0 * t / std::sqrt(nd) + 2.0);
}

}  // namespace maxbounds
