#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxbounds/oracles.hpp"

namespace maxbounds {

/// n rounds x d actions of losses in [0,1], row-major.
struct LossMatrix {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::vector<double> losses;

  double at(std::int64_t t, std::int64_t i) const {
    return losses[static_cast<std::size_t>(t * d + i)];
  }
};

/// Per-round action distributions of a learner (row t is the distribution
/// played before seeing round t's losses), plus optional sampled actions.
struct LearnerTrace {
  std::int64_t n = 0;
  std::int64_t d = 0;
  double eta = 0.0;
  std::vector<double> distributions;  // row-major n x d, rows sum to 1
  std::optional<std::vector<std::int64_t>> sampled_actions;

  double prob(std::int64_t t, std::int64_t i) const {
    return distributions[static_cast<std::size_t>(t * d + i)];
  }
};

enum class RegretMode { ExpectedLoss, Sampled };

struct RegretSummary {
  double algorithm_loss = 0.0;
  double best_action_loss = 0.0;
  double regret = 0.0;
  RegretMode mode = RegretMode::ExpectedLoss;
};

/// Outcome of averaging Hedge's expected-loss regret over random loss
/// matrices. max_guarantee_excess is the largest observed value of
/// regret - sqrt((n/2) ln d) across replicates (<= 0 when the guarantee
/// held everywhere).
struct RegretExperiment {
  MonteCarloEstimate estimate;
  double max_guarantee_excess = 0.0;
};

/// i.i.d. fair-coin losses in {0,1}; under these, 1 - 2*loss accumulates to
/// a symmetric random walk per action. Deterministic per seed.
LossMatrix sample_random_losses(std::int64_t n, std::int64_t d, std::uint64_t seed);

/// Exponential weights: distribution at round t proportional to
/// exp(-eta * cumulative loss over rounds < t), round 1 uniform. Weights are
/// kept in log space with max-subtraction before normalization. When
/// sample_seed is given, also samples one action per round.
LearnerTrace hedge_run(const LossMatrix& losses, double eta,
                       std::optional<std::uint64_t> sample_seed = std::nullopt);

RegretSummary regret_summary(const LossMatrix& losses, const LearnerTrace& trace,
                             RegretMode mode);

/// Horizon-tuned learning rate sqrt(8 ln d / n), under which Hedge's
/// expected-loss regret is at most sqrt((n/2) ln d) for any loss sequence.
double default_eta(std::int64_t n, std::int64_t d);

/// Average expected-loss regret of Hedge over `replicates` independently
/// drawn random loss matrices. Deterministic per seed.
RegretExperiment run_regret_experiment(std::int64_t n, std::int64_t d, double eta,
                                       std::int64_t replicates, std::uint64_t seed);

MonteCarloEstimate estimate_expected_regret(std::int64_t n, std::int64_t d, double eta,
                                            std::int64_t replicates, std::uint64_t seed);

}  // namespace maxbounds
