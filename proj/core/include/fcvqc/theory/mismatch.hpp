#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fcvqc::theory {

// Support-mismatch experiment: three equal-budget single-stage networks
// (parallel, sliding-window, fully-connected mixing) are trained on the same
// regression task whose target has separable, block-local, and block-global
// components. Parallel blocks cannot see the local or global parts, the
// sliding window reaches the local part only, and fully-connected mixing
// covers everything, so the achievable training errors should order
// E_parallel >= E_sliding >= E_fully.
struct MismatchConfig {
  int n_samples = 256;
  int epochs = 600;
  double learning_rate = 0.01;
  int n_seeds = 5;
  std::uint64_t seed0 = 11;
  int hidden_layers = 1;
  // Component amplitudes; their sum stays below 1 so the target is
  // representable by [-1, 1] expectation outputs. The local and global
  // weights set the structural error floors of the parallel and sliding
  // arms, so they are kept well above the optimizer's own residual.
  double c_separable = 0.38;
  double c_local = 0.25;
  double c_global = 0.35;
};

// Target for the d = 12, four-block (q = 3) task. x must have 12 entries;
// the returned vector has 12 entries. Writing s_b = (x[3b] + x[3b+1] +
// x[3b+2])/sqrt(3) for the sum of block b, output coordinate (b, i) is
//   c_sep  * sin(a_i * s_b)
// + c_loc  * sin(s_{b-1} - s_{b+1} + d_i)
// + c_glob * sin(1.1 * s_{b+2} + e_i)
// with block indices mod 4. Each component reads the input only through
// block sums — one scalar per block — matching the one-channel-per-block
// bandwidth of the mixing permutations, so which blocks an arm can reach
// (its support), not channel capacity, decides its attainable error.
std::vector<double> mismatch_target(std::span<const double> x, const MismatchConfig& cfg);

struct MismatchArmResult {
  std::string name;
  std::vector<double> final_mse;  // masked train MSE per seed

  double mean_mse() const;
};

struct MismatchResult {
  MismatchConfig cfg;
  MismatchArmResult parallel;
  MismatchArmResult sliding;
  MismatchArmResult fully;

  // Chain E_par >= E_sw >= E_fc up to a multiplicative slack.
  bool chain_holds(double slack) const;
};

MismatchResult run_mismatch_experiment(const MismatchConfig& cfg);

}  // namespace fcvqc::theory
