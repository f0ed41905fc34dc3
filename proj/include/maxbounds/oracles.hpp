#pragma once

#include <cstdint>
#include <vector>

#include "maxbounds/extremes.hpp"

namespace maxbounds {

/// Seeded Monte Carlo estimate of an expectation.
struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(replicates)
  std::int64_t replicates = 0;
  std::uint64_t seed = 0;
};

/// CDF of one length-n symmetric random walk on its support
/// {-n, -n+2, ..., n}, stored as log-probabilities. log_cdf[j] corresponds
/// to support point -n + 2j and is computed as log1p(-S) from the binomial
/// survival S, which keeps precision where the CDF approaches 1.
struct WalkMaxDistribution {
  std::int64_t n = 0;
  std::vector<double> log_cdf;  // n+1 entries, nondecreasing, last = 0
};

WalkMaxDistribution walk_distribution(std::int64_t n);

/// Exact E[max of d i.i.d. length-n walks], d real >= 1, via
/// sum_z z (F(z)^d - F(z-2)^d) with F^d evaluated as exp(d log F).
double walk_max_exact(std::int64_t n, double d);

/// Exact E[max of d i.i.d. N(0, sigma^2)], d real >= 1, by adaptive
/// quadrature of the tail identity
///   E[max] = sigma ( int_0^inf (1 - Phi^d) dx - int_-inf^0 Phi^d dx )
/// truncated at 12 standard deviations.
double gaussian_max_exact(double d, double sigma);

/// Plain-sampling estimate of E[max] for integer d <= 1e6. Deterministic
/// per (spec, replicates, seed); replicate i draws from a generator seeded
/// by a splitmix64 mix of (seed, i).
MonteCarloEstimate max_monte_carlo(const EnsembleSpec& spec, std::int64_t replicates,
                                   std::uint64_t seed);

/// Per-replicate stream derivation shared by all seeded estimators.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace maxbounds
