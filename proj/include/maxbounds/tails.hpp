#pragma once

#include <cstdint>
#include <vector>

namespace maxbounds {

/// Which binomial tail lower bound to evaluate.
enum class BinomialLowerMode { McKay, Stirling };

/// Lower bound on Pr[X >= x] for X ~ N(0, sigma^2):
///   exp(-x^2 / (2 sigma^2)) / (sqrt(2 pi) x/sigma + 2).
/// Depends on the query only through x/sigma.
double gaussian_tail_lower(double x, double sigma);

/// Exact Pr[B >= k] for B ~ Binomial(n, 1/2), summed in log space via
/// log-gamma with compensated accumulation. Returns 1 for k <= 0 and 0 for
/// k > n.
double binomial_tail_exact(std::int64_t n, std::int64_t k);

/// Survival values Pr[B >= k] for every k in 0..n+1 (index k), obtained by
/// one suffix sum over the PMF. Shared by the single-query path and the
/// random-walk oracle, where all thresholds are needed at once.
std::vector<double> binomial_survival_table(std::int64_t n);

/// Lower bound on Pr[B >= k] for B ~ Binomial(n, 1/2) with n/2 <= k <= n.
/// McKay:    sqrt(n) C(n-1, k-1) 2^-n * mills(x),  x = (2k-n)/sqrt(n)
/// Stirling: exp(-n D(k/n || 1/2)) / (exp(1/6) sqrt(2 pi)) * mills(x)
/// both with the exact Mill's ratio.
double binomial_tail_lower(std::int64_t n, std::int64_t k, BinomialLowerMode mode);

/// Lower bound on Pr[B >= n/2 + t - 1] for real t in [1, n/2 + 1]:
///   exp(-1/6) exp(-2 psi(t/n) t^2 / n) / (sqrt(2 pi) 2t/sqrt(n) + 2).
/// For t > n/2 the psi argument is clamped to 1/2 (its domain endpoint);
/// see the corollary's hypothesis, which only exercises t/n <= 1/2.
double binomial_tail_corollary(std::int64_t n, double t);

}  // namespace maxbounds
