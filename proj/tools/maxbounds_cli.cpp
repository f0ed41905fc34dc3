// Command-line front end: sweep verification of the E[max] brackets, tail
// lower-bound tables, and the expert-advice regret experiment.
//
// Exit codes: 0 all checks pass, 1 at least one bound violation, 2 usage or
// configuration error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxbounds/analytic.hpp"
#include "maxbounds/experts.hpp"
#include "maxbounds/extremes.hpp"
#include "maxbounds/oracles.hpp"
#include "maxbounds/tails.hpp"

using json = nlohmann::json;
using namespace maxbounds;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Options {
  std::vector<std::string> families;
  std::vector<double> d_grid;
  std::vector<std::int64_t> n_grid;
  std::vector<double> sigma_grid;
  std::int64_t replicates = 10000;
  std::uint64_t seed = 1;
  std::optional<double> eta;
  double tolerance_abs = 1e-9;
  double tolerance_rel = 1e-6;
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  double inflate_lower = 1.0;  // test hook: multiplies lower bounds in verify
};

// Config file values fill in anything the flags did not set.
void merge_config(Options& opt, const CLI::App& cmd) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + opt.config_path);
  json cfg = json::parse(in);
  auto defaulted = [&](const char* flag) { return cmd.count(flag) == 0; };
  if (cfg.contains("families") && defaulted("--family"))
    opt.families = cfg["families"].get<std::vector<std::string>>();
  if (cfg.contains("d_grid") && defaulted("--d-grid"))
    opt.d_grid = cfg["d_grid"].get<std::vector<double>>();
  if (cfg.contains("n_grid") && defaulted("--n-grid"))
    opt.n_grid = cfg["n_grid"].get<std::vector<std::int64_t>>();
  if (cfg.contains("sigma_grid") && defaulted("--sigma-grid"))
    opt.sigma_grid = cfg["sigma_grid"].get<std::vector<double>>();
  if (cfg.contains("replicates") && defaulted("--replicates"))
    opt.replicates = cfg["replicates"].get<std::int64_t>();
  if (cfg.contains("seed") && defaulted("--seed")) opt.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("eta") && defaulted("--eta")) opt.eta = cfg["eta"].get<double>();
  if (cfg.contains("tolerance_abs") && defaulted("--tolerance-abs"))
    opt.tolerance_abs = cfg["tolerance_abs"].get<double>();
  if (cfg.contains("tolerance_rel") && defaulted("--tolerance-rel"))
    opt.tolerance_rel = cfg["tolerance_rel"].get<double>();
}

std::ostream& open_out(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + opt.out_path);
  return file;
}

struct VerifyRow {
  std::string family;
  double d = 0.0;
  std::optional<std::int64_t> n;
  std::optional<double> sigma;
  std::optional<double> lower_primary;
  std::optional<double> lower_simplified;
  double exact = 0.0;
  double upper = 0.0;
  std::string status;
};

json row_to_json(const VerifyRow& r) {
  json j;
  j["family"] = r.family;
  j["d"] = r.d;
  if (r.n) j["n"] = *r.n;
  if (r.sigma) j["sigma"] = *r.sigma;
  if (r.lower_primary) j["lower_primary"] = *r.lower_primary;
  if (r.lower_simplified) j["lower_simplified"] = *r.lower_simplified;
  j["exact"] = r.exact;
  j["upper"] = r.upper;
  j["status"] = r.status;
  return j;
}

int cmd_verify(const Options& opt) {
  const auto slack = [&](double exact) {
    return std::max(opt.tolerance_abs, opt.tolerance_rel * std::fabs(exact));
  };
  std::vector<VerifyRow> rows;

  const bool want_gaussian =
      std::count(opt.families.begin(), opt.families.end(), "gaussian") > 0;
  const bool want_walk = std::count(opt.families.begin(), opt.families.end(), "walk") > 0;

  if (want_gaussian) {
    for (double d : opt.d_grid) {
      for (double sigma : opt.sigma_grid) {
        VerifyRow row;
        row.family = "gaussian";
        row.d = d;
        row.sigma = sigma;
        const EnsembleSpec spec = EnsembleSpec::gaussian(d, sigma);
        row.exact = gaussian_max_exact(d, sigma);
        row.upper = subgaussian_max_upper(d, sigma * sigma);
        if (!lower_bound_in_scope(spec)) {
          row.status = "out_of_scope";
        } else {
          row.lower_primary =
              opt.inflate_lower * gaussian_max_lower(d, sigma, BoundForm::Primary);
          row.lower_simplified =
              opt.inflate_lower * gaussian_max_lower(d, sigma, BoundForm::Simplified);
          const double lo = std::max(*row.lower_primary, *row.lower_simplified);
          const double s = slack(row.exact);
          if (lo > row.exact + s || row.exact > row.upper + s)
            row.status = "fail";
          else if (*row.lower_primary < 0.0 && *row.lower_simplified < 0.0)
            row.status = "vacuous";
          else
            row.status = "pass";
        }
        rows.push_back(row);
      }
    }
  }
  if (want_walk) {
    for (std::int64_t n : opt.n_grid) {
      for (double d : opt.d_grid) {
        VerifyRow row;
        row.family = "walk";
        row.d = d;
        row.n = n;
        const EnsembleSpec spec = EnsembleSpec::walk(n, d);
        row.exact = walk_max_exact(n, d);
        row.upper = subgaussian_max_upper(d, static_cast<double>(n));
        if (!lower_bound_in_scope(spec)) {
          row.status = "out_of_scope";
        } else {
          row.lower_primary = opt.inflate_lower * walk_max_lower(n, d, BoundForm::Primary);
          row.lower_simplified =
              opt.inflate_lower * walk_max_lower(n, d, BoundForm::Simplified);
          const double lo = std::max(*row.lower_primary, *row.lower_simplified);
          const double s = slack(row.exact);
          if (lo > row.exact + s || row.exact > row.upper + s)
            row.status = "fail";
          else if (*row.lower_primary < 0.0 && *row.lower_simplified < 0.0)
            row.status = "vacuous";
          else
            row.status = "pass";
        }
        rows.push_back(row);
      }
    }
  }

  const bool want_tails = std::count(opt.families.begin(), opt.families.end(), "tails") > 0;
  if (want_tails) {
    // Tail-bound dominance as bracket rows: the two binomial lower bounds
    // against the exact tail, with the trivial upper bound 1. The d column
    // carries the threshold k.
    for (std::int64_t n : opt.n_grid) {
      for (std::int64_t k = (n + 1) / 2; k <= n; ++k) {
        VerifyRow row;
        row.family = "tails";
        row.d = static_cast<double>(k);
        row.n = n;
        row.exact = binomial_tail_exact(n, k);
        row.upper = 1.0;
        row.lower_primary =
            opt.inflate_lower * binomial_tail_lower(n, k, BinomialLowerMode::McKay);
        row.lower_simplified =
            opt.inflate_lower * binomial_tail_lower(n, k, BinomialLowerMode::Stirling);
        const double lo = std::max(*row.lower_primary, *row.lower_simplified);
        row.status = lo > row.exact + slack(row.exact) ? "fail" : "pass";
        rows.push_back(row);
      }
    }
  }

  std::int64_t pass = 0, fail = 0, vacuous = 0, oos = 0;
  for (const auto& r : rows) {
    if (r.status == "pass") ++pass;
    else if (r.status == "fail") ++fail;
    else if (r.status == "vacuous") ++vacuous;
    else ++oos;
  }
  json summary;
  summary["pass_count"] = pass;
  summary["fail_count"] = fail;
  summary["vacuous_count"] = vacuous;
  summary["out_of_scope_count"] = oos;

  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  if (opt.format == "json") {
    json doc = summary;
    doc["rows"] = json::array();
    for (const auto& r : rows) doc["rows"].push_back(row_to_json(r));
    out << doc.dump(2) << "\n";
  } else {
    out << "family,d,n,sigma,lower_primary,lower_simplified,exact,upper,status\n";
    for (const auto& r : rows) {
      out << r.family << ',' << fmt17(r.d) << ',' << (r.n ? std::to_string(*r.n) : "") << ','
          << (r.sigma ? fmt17(*r.sigma) : "") << ','
          << (r.lower_primary ? fmt17(*r.lower_primary) : "") << ','
          << (r.lower_simplified ? fmt17(*r.lower_simplified) : "") << ',' << fmt17(r.exact)
          << ',' << fmt17(r.upper) << ',' << r.status << "\n";
    }
    summary["rows"] = rows.size();
    if (!opt.out_path.empty())
      std::cout << summary.dump() << "\n";
    else
      out << "# " << summary.dump() << "\n";
  }
  return fail > 0 ? 1 : 0;
}

int cmd_tails(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  out << "n,k,t,exact,mckay,stirling,corollary,gaussian_lower,status\n";
  bool any_fail = false;
  for (std::int64_t n : opt.n_grid) {
    const double nd = static_cast<double>(n);
    for (std::int64_t k = (n + 1) / 2; k <= n; ++k) {
      const double t = static_cast<double>(k) - nd / 2.0 + 1.0;  // so ceil(n/2 + t - 1) = k
      const double exact = binomial_tail_exact(n, k);
      const double mckay = binomial_tail_lower(n, k, BinomialLowerMode::McKay);
      const double stirling = binomial_tail_lower(n, k, BinomialLowerMode::Stirling);
      const double corollary = binomial_tail_corollary(n, t);
      const double x = (2.0 * static_cast<double>(k) - nd) / std::sqrt(nd);
      const double gauss_lower = gaussian_tail_lower(x, 1.0);
      const double gauss_exact = std_normal_survival(x);
      const double s = opt.tolerance_abs;
      const bool ok = mckay <= exact + s && stirling <= exact + s && corollary <= exact + s &&
                      gauss_lower <= gauss_exact + s;
      any_fail = any_fail || !ok;
      out << n << ',' << k << ',' << fmt17(t) << ',' << fmt17(exact) << ',' << fmt17(mckay)
          << ',' << fmt17(stirling) << ',' << fmt17(corollary) << ',' << fmt17(gauss_lower)
          << ',' << (ok ? "pass" : "fail") << "\n";
    }
  }
  return any_fail ? 1 : 0;
}

int cmd_experts(const Options& opt) {
  const std::int64_t n = opt.n_grid.empty() ? 20 : opt.n_grid.front();
  const std::int64_t d =
      opt.d_grid.empty() ? 4 : static_cast<std::int64_t>(opt.d_grid.front());
  if (n < 1 || d < 1) throw CLI::ValidationError("experts requires n >= 1 and d >= 1");
  const double eta = opt.eta ? *opt.eta : (d >= 2 ? default_eta(n, d) : 1.0);

  const RegretExperiment exp = run_regret_experiment(n, d, eta, opt.replicates, opt.seed);
  const double half_exact = 0.5 * walk_max_exact(n, static_cast<double>(d));

  json report;
  report["eta_used"] = eta;
  report["mc_regret"] = {{"mean", exp.estimate.mean}, {"std_error", exp.estimate.std_error}};
  report["half_walk_max_exact"] = half_exact;
  const EnsembleSpec spec = EnsembleSpec::walk(n, static_cast<double>(d));
  if (lower_bound_in_scope(spec))
    report["regret_lower_bound"] = experts_regret_bounds(n, static_cast<double>(d)).first;
  else
    report["regret_lower_bound"] = "out_of_scope";
  report["regret_upper_bound"] =
      d >= 2 ? experts_regret_upper(n, static_cast<double>(d)) : 0.0;
  const double gap = exp.estimate.std_error > 0.0
                         ? std::fabs(exp.estimate.mean - half_exact) / exp.estimate.std_error
                         : 0.0;
  report["reduction_gap_in_std_errors"] = gap;

  std::ofstream file;
  std::ostream& out = open_out(opt, file);
  out << report.dump(2) << "\n";

  const bool reduction_ok =
      std::fabs(exp.estimate.mean - half_exact) <= 4.0 * exp.estimate.std_error ||
      exp.estimate.std_error == 0.0;
  const bool guarantee_ok = exp.max_guarantee_excess <= 1e-9;
  return (reduction_ok && guarantee_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for extreme-value expectation bounds and expert-advice regret"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", opt.families, "Families to sweep: gaussian, walk");
    cmd->add_option("--d-grid", opt.d_grid, "Ensemble sizes d");
    cmd->add_option("--n-grid", opt.n_grid, "Walk lengths / round counts n");
    cmd->add_option("--sigma-grid", opt.sigma_grid, "Gaussian standard deviations");
    cmd->add_option("--replicates", opt.replicates, "Monte Carlo replicates");
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--eta", opt.eta, "Hedge learning rate (default: sqrt(8 ln d / n))");
    cmd->add_option("--tolerance-abs", opt.tolerance_abs, "Absolute bracket slack");
    cmd->add_option("--tolerance-rel", opt.tolerance_rel, "Relative bracket slack");
    cmd->add_option("--config", opt.config_path,
                    "JSON config file; command-line flags take precedence");
    cmd->add_option("--out", opt.out_path, "Output path (default: stdout)");
    cmd->add_option("--format", opt.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    return cmd;
  };

  CLI::App* verify = add_common(app.add_subcommand(
      "verify", "Check lower <= exact <= upper for the Gaussian and walk ensembles"));
  verify
      ->add_option("--inflate-lower", opt.inflate_lower,
                   "Multiply lower bounds by this factor (test hook)")
      ->group("");  // hidden
  CLI::App* tails = add_common(app.add_subcommand(
      "tails", "Tabulate tail lower bounds against exact tail probabilities"));
  CLI::App* experts = add_common(app.add_subcommand(
      "experts", "Run the random-loss Hedge experiment and report the regret bracket"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* cmd = verify->parsed() ? verify : tails->parsed() ? tails : experts;
    merge_config(opt, *cmd);
    // Default grids for anything still unset.
    if (opt.families.empty()) opt.families = {"gaussian", "walk"};
    if (opt.d_grid.empty()) opt.d_grid = {2, 4, 8, 16, 32, 64, 1e2, 1e4, 1e6, 1e9, 1e12};
    if (opt.sigma_grid.empty()) opt.sigma_grid = {0.5, 1.0, 3.0};
    if (opt.n_grid.empty()) {
      opt.n_grid.clear();
      for (std::int64_t n = 7; n <= 40; ++n) opt.n_grid.push_back(n);
    }
    if (verify->parsed()) return cmd_verify(opt);
    if (tails->parsed()) return cmd_tails(opt);
    return cmd_experts(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
