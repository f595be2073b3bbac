#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcvqc/train/fit.hpp"

namespace fcvqc::data {

// Market scenario definition: one call option per underlying, all assets
// starting at s0 and following independent risk-neutral GBM.
struct ScenarioConfig {
  int assets = 36;
  int steps = 10;     // M timesteps after t=0
  int paths = 1000;   // Monte Carlo paths
  double s0 = 100.0;
  double rate = 0.05;
  double horizon = 1.0;  // T, in years
  double strike_lo = 90.0, strike_hi = 110.0;
  double vol_lo = 0.1, vol_hi = 0.4;
  std::uint64_t seed = 7;
};

// Generated scenario: simulated prices, discounted future payoffs (the
// training labels), and the analytic Black-Scholes references. All arrays
// are [path][step][asset] row-major with step in 0..M.
struct Scenario {
  ScenarioConfig cfg;
  std::vector<double> strikes;  // assets
  std::vector<double> vols;     // assets
  std::vector<double> paths;    // paths * (steps+1) * assets
  std::vector<double> labels;   // e^{-r(T-t_k)} * max(X_T - E_j, 0)
  std::vector<double> bs;       // Black-Scholes price at (X_{t_k}, T-t_k)

  std::size_t index(std::size_t path, int step, int asset) const {
    return (path * (cfg.steps + 1) + static_cast<std::size_t>(step)) * cfg.assets + asset;
  }
};

// Exact log-space GBM stepping (no discretization bias):
// X_{k+1} = X_k * exp((r - sigma^2/2) dt + sigma sqrt(dt) Z).
Scenario make_scenario(const ScenarioConfig& cfg);

// Analytic European call. Handles tau = 0 (intrinsic value) and sigma = 0.
double black_scholes_call(double s, double strike, double rate, double vol, double tau);

// Text serialization; regenerating with the same config yields a
// byte-identical file.
void save_scenario(const std::string& path, const Scenario& scenario);
Scenario load_scenario(const std::string& path);

// Portfolio-level relative mean absolute error against a reference, averaged
// over timesteps: mean_k [ sum_i |sum_j pred - sum_j ref| / sum_i sum_j ref ].
// Both arrays are [n_paths][steps+1][assets] flat.
double portfolio_rel_mae(std::span<const double> pred, std::span<const double> ref,
                         std::size_t n_paths, int steps, int assets);

// Model-ready view of a scenario: inputs are prices / s0, labels min-max
// scaled per option to [-0.9, 0.9] from the training paths. Splitting is on
// the path axis so all timesteps of one path land in the same split.
struct PortfolioDataset {
  train::SampleSet train, val, test;
  std::vector<std::size_t> train_paths, val_paths, test_paths;
  std::vector<double> label_lo, label_hi;  // per-option scaler range

  double unscale_label(int asset, double v) const;
};

PortfolioDataset build_portfolio_dataset(const Scenario& scenario, double f_train,
                                         double f_val, std::uint64_t seed);

// Raw-scale predictions and references for the given split's paths, flat
// [n][steps+1][assets] — ready for portfolio_rel_mae.
struct RelMaeInputs {
  std::vector<double> pred;
  std::vector<double> ref;
  std::size_t n_paths;
};

RelMaeInputs assemble_rel_mae_inputs(const Scenario& scenario, const PortfolioDataset& ds,
                                     std::span<const std::size_t> path_ids,
                                     std::span<const double> scaled_pred);

}  // namespace fcvqc::data
