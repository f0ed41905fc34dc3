#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace maxbounds {

enum class Family { Gaussian, Walk };
enum class BoundForm { Primary, Simplified };

/// Parameters of one maximum-of-i.i.d. problem. d is real-valued so the
/// bound formulas (which only see ln d, ln ln d) can be probed at sizes like
/// e^30; simulation-facing code restricts d to integers.
struct EnsembleSpec {
  Family family;
  double d = 2.0;
  double sigma = 1.0;   // Gaussian only
  std::int64_t n = 1;   // walk length, walk only

  static EnsembleSpec gaussian(double d, double sigma) {
    return EnsembleSpec{Family::Gaussian, d, sigma, 0};
  }
  static EnsembleSpec walk(std::int64_t n, double d) {
    return EnsembleSpec{Family::Walk, d, 0.0, n};
  }
};

/// The constants appearing in the lower-bound proofs:
///   f(d)     = sqrt(2 - 2 ln ln d / ln d)
///   Gaussian threshold constant = f(d)
///   walk threshold constant     = f(d) / sqrt(psi(1.6 sqrt(ln d) / (2 sqrt(n))))
struct ThresholdConstants {
  double f = 0.0;
  double c_gaussian = 0.0;
  std::optional<double> c_walk;
  std::optional<double> psi_arg;
};

/// Assembled bracket lower <= exact <= upper for one ensemble. Lower forms
/// are absent when the theorem hypotheses exclude the spec.
struct BoundBracket {
  EnsembleSpec spec;
  std::optional<double> lower_primary;
  std::optional<double> lower_simplified;
  double exact = 0.0;
  double upper = 0.0;
  bool lower_ok = true;   // max(lower forms) <= exact + tol (true when absent)
  bool upper_ok = true;   // exact <= upper + tol
  bool vacuous = false;   // both lower forms negative, inequalities still hold
};

/// E[max] <= sqrt(variance) * sqrt(2 ln d) for d (possibly dependent)
/// variables that are variance-sub-Gaussian. Covers both ensembles: the
/// Gaussian with variance sigma^2 and the length-n walk with variance n.
double subgaussian_max_upper(double d, double variance);

ThresholdConstants threshold_constants(const EnsembleSpec& spec);

/// Lower bound on E[max of d i.i.d. N(0, sigma^2)], d >= 2.
/// Primary:    sigma (1 - e^{-sqrt(ln d)/6.35})(sqrt(2 ln d - 2 ln ln d) + sqrt(2/pi)) - sqrt(2/pi) sigma
/// Simplified: 0.13 sigma sqrt(ln d) - 0.7 sigma
/// May be negative (vacuous but valid); returned unclamped.
double gaussian_max_lower(double d, double sigma, BoundForm form);

/// Lower bound on E[max of d i.i.d. symmetric random walks of length n],
/// valid for n >= 7 and 2 <= d <= exp(n/3).
/// Primary:    (1 - e^{-sqrt(ln d)/(3.1 sqrt(2 pi))}) / sqrt(psi(1.6 sqrt(ln d)/(2 sqrt(n))))
///             * sqrt(n) (sqrt(2 ln d - 2 ln ln d) - 1) - sqrt(n)
/// Simplified: 0.09 sqrt(n ln d) - 2 sqrt(n)
double walk_max_lower(std::int64_t n, double d, BoundForm form);

/// Regret bracket for learning with expert advice over n rounds and d
/// actions: lower is exactly half the walk primary lower bound, upper is
/// sqrt((n/2) ln d).
std::pair<double, double> experts_regret_bounds(std::int64_t n, double d);

double experts_regret_upper(std::int64_t n, double d);

/// True iff the lower-bound hypotheses hold for the spec (Gaussian: d >= 2;
/// walk: n >= 7 and 2 <= d <= exp(n/3)).
bool lower_bound_in_scope(const EnsembleSpec& spec);

/// Joins the closed-form bounds with an externally supplied exact value and
/// evaluates the bracket inequalities at the given absolute slack.
BoundBracket make_bracket(const EnsembleSpec& spec, double exact, double slack = 1e-9);

}  // namespace maxbounds
