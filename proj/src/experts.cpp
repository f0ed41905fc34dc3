#include "maxbounds/experts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "maxbounds/extremes.hpp"

namespace maxbounds {

LossMatrix sample_random_losses(std::int64_t n, std::int64_t d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::domain_error("sample_random_losses: requires n, d >= 1");
  LossMatrix m;
  m.n = n;
  m.d = d;
  m.losses.resize(static_cast<std::size_t>(n * d));
  std::mt19937_64 rng(derive_stream_seed(seed, 0));
  for (auto& v : m.losses) v = static_cast<double>(rng() >> 63);
  return m;
}

LearnerTrace hedge_run(const LossMatrix& losses, double eta,
                       std::optional<std::uint64_t> sample_seed) {
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw std::domain_error("hedge_run: requires finite eta > 0");
  const std::int64_t n = losses.n, d = losses.d;
  LearnerTrace trace;
  trace.n = n;
  trace.d = d;
  trace.eta = eta;
  trace.distributions.resize(static_cast<std::size_t>(n * d));

  std::optional<std::mt19937_64> rng;
  if (sample_seed) {
    rng.emplace(derive_stream_seed(*sample_seed, 0));
    trace.sampled_actions.emplace();
    trace.sampled_actions->reserve(static_cast<std::size_t>(n));
  }

  std::vector<double> cum_loss(static_cast<std::size_t>(d), 0.0);
  std::vector<double> row(static_cast<std::size_t>(d));
  for (std::int64_t t = 0; t < n; ++t) {
    double best = -eta * *std::min_element(cum_loss.begin(), cum_loss.end());
    double norm = 0.0;
    for (std::int64_t i = 0; i < d; ++i) {
      row[static_cast<std::size_t>(i)] =
          std::exp(-eta * cum_loss[static_cast<std::size_t>(i)] - best);
      norm += row[static_cast<std::size_t>(i)];
    }
    for (std::int64_t i = 0; i < d; ++i)
      trace.distributions[static_cast<std::size_t>(t * d + i)] =
          row[static_cast<std::size_t>(i)] / norm;
    if (rng) {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double u = unit(*rng);
      double acc = 0.0;
      std::int64_t pick = d - 1;
      for (std::int64_t i = 0; i < d; ++i) {
        acc += trace.prob(t, i);
        if (u < acc) {
          pick = i;
          break;
        }
      }
      trace.sampled_actions->push_back(pick);
    }
    for (std::int64_t i = 0; i < d; ++i)
      cum_loss[static_cast<std::size_t>(i)] += losses.at(t, i);
  }
  return trace;
}

RegretSummary regret_summary(const LossMatrix& losses, const LearnerTrace& trace,
                             RegretMode mode) {
  if (losses.n != trace.n || losses.d != trace.d)
    throw std::domain_error("regret_summary: loss/trace shape mismatch");
  if (mode == RegretMode::Sampled && !trace.sampled_actions)
    throw std::domain_error("regret_summary: sampled mode requires sampled actions");
  const std::int64_t n = losses.n, d = losses.d;
  RegretSummary s;
  s.mode = mode;
  for (std::int64_t t = 0; t < n; ++t) {
    if (mode == RegretMode::ExpectedLoss) {
      double inner = 0.0;
      for (std::int64_t i = 0; i < d; ++i) inner += trace.prob(t, i) * losses.at(t, i);
      s.algorithm_loss += inner;
    } else {
      s.algorithm_loss += losses.at(t, (*trace.sampled_actions)[static_cast<std::size_t>(t)]);
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < d; ++i) {
    double col = 0.0;
    for (std::int64_t t = 0; t < n; ++t) col += losses.at(t, i);
    best = std::min(best, col);
  }
  s.best_action_loss = best;
  s.regret = s.algorithm_loss - s.best_action_loss;
  return s;
}

double default_eta(std::int64_t n, std::int64_t d) {
  if (n < 1) throw std::domain_error("default_eta: requires n >= 1");
  if (d < 2) throw std::domain_error("default_eta: requires d >= 2");
  return std::sqrt(8.0 * std::log(static_cast<double>(d)) / static_cast<double>(n));
}

RegretExperiment run_regret_experiment(std::int64_t n, std::int64_t d, double eta,
                                       std::int64_t replicates, std::uint64_t seed) {
  if (replicates < 2) throw std::domain_error("run_regret_experiment: requires replicates >= 2");
  if (n < 1 || d < 1) throw std::domain_error("run_regret_experiment: requires n, d >= 1");
  const double guarantee =
      d >= 2 ? experts_regret_upper(n, static_cast<double>(d)) : 0.0;
  double sum = 0.0, sum_sq = 0.0;
  double max_excess = -std::numeric_limits<double>::infinity();
  for (std::int64_t r = 0; r < replicates; ++r) {
    const LossMatrix losses =
        sample_random_losses(n, d, derive_stream_seed(seed, static_cast<std::uint64_t>(r)));
    const LearnerTrace trace = hedge_run(losses, eta);
    const double regret = regret_summary(losses, trace, RegretMode::ExpectedLoss).regret;
    sum += regret;
    sum_sq += regret * regret;
    max_excess = std::max(max_excess, regret - guarantee);
  }
  RegretExperiment out;
  out.estimate.replicates = replicates;
  out.estimate.seed = seed;
  out.estimate.mean = sum / static_cast<double>(replicates);
  const double var =
      (sum_sq - sum * sum / static_cast<double>(replicates)) / static_cast<double>(replicates - 1);
  out.estimate.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(replicates));
  out.max_guarantee_excess = max_excess;
  return out;
}

MonteCarloEstimate estimate_expected_regret(std::int64_t n, std::int64_t d, double eta,
                                            std::int64_t replicates, std::uint64_t seed) {
  return run_regret_experiment(n, d, eta, replicates, seed).estimate;
}

}  // namespace maxbounds
