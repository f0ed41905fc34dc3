#pragma once

#include <cstdint>

namespace maxbounds {

/// Which form of the standard-normal Mill's ratio to evaluate.
enum class MillsMode { Exact, Boyd, BoydSimplified };

/// Two-sided Stirling bracket on n! (Robbins' explicit constants).
struct FactorialBracket {
  std::int64_t n;
  double lower;  // sqrt(2*pi*n) * (n/e)^n
  double upper;  // exp(1/12) * lower
};

enum class MgfKind { Rademacher, Gaussian };

/// Density of N(0,1) at x.
double std_normal_pdf(double x);

/// Upper tail 1 - Phi(x) of N(0,1), computed via erfc so the far tail
/// (x up to ~38) keeps full relative precision.
double std_normal_survival(double x);

/// Mill's ratio (1 - Phi(x)) / phi(x) for x >= 0, either exact or one of
/// Boyd's two closed-form lower bounds. For every x >= 0,
///   BoydSimplified <= Boyd <= Exact,
/// with Boyd equal to Exact at x = 0.
double mills_ratio(double x, MillsMode mode);

/// Robbins' bracket sqrt(2*pi*n)(n/e)^n < n! < exp(1/12) sqrt(2*pi*n)(n/e)^n,
/// valid for n >= 1.
FactorialBracket factorial_bounds(std::int64_t n);

/// KL divergence between Bernoulli(p) and Bernoulli(q) in nats, with the
/// 0*ln(0) = 0 convention. Returns +infinity when q is 0 or 1 and p != q.
double kl_bernoulli(double p, double q);

/// psi(x) = D(1/2 + x || 1/2) / (2 x^2) on [-1/2, 1/2], with the removable
/// singularity psi(0) = 1 filled by the series 1 + (2/3)x^2 + (16/15)x^4.
/// Range is [1, 2 ln 2].
double psi(double x);

/// Sub-Gaussian MGF slack exp(sigma^2 s^2 / 2) - E[exp(sX)].
/// Rademacher uses sigma = 1 and E[exp(sX)] = cosh(s); Gaussian N(0,sigma^2)
/// meets the definition with equality, so the margin is 0 up to rounding.
double sub_gaussian_mgf_margin(MgfKind kind, double s, double sigma = 1.0);

}  // namespace maxbounds
