#include "fcvqc/theory/contraction.hpp"

#include <cmath>
#include <stdexcept>

#include "fcvqc/qsim/block.hpp"
#include "fcvqc/qsim/noise.hpp"
#include "fcvqc/util/rng.hpp"

namespace fcvqc::theory {

namespace {

constexpr int kWires = 2;
constexpr int kMaxSeedTries = 200;

// Draw the encoding angles and the full-depth angle tensor for one candidate
// seed. Depth-D runs reuse the first 3*q*D entries, so deeper circuits are
// strict extensions of shallower ones.
void draw_angles(std::uint64_t seed, int max_depth, std::vector<double>& h,
                 std::vector<double>& params) {
  auto rng = make_rng(seed, 0xC0117);
  h.resize(kWires);
  for (double& v : h) v = uniform_range(rng, -3.141592653589793, 3.141592653589793);
  params.resize(static_cast<std::size_t>(3 * kWires * max_depth));
  for (double& v : params) v = uniform_range(rng, -3.141592653589793, 3.141592653589793);
}

}  // namespace

ContractionFit deep_contraction_experiment(double p, int max_depth, std::uint64_t seed) {
  if (max_depth < 2) throw std::invalid_argument("deep_contraction_experiment: max_depth must be >= 2");
  if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("deep_contraction_experiment: p must lie in (0, 1)");

  ContractionFit fit;
  fit.p = p;
  fit.lambda_true = 1.0 - p;

  std::vector<double> h;
  std::vector<double> params;

  // Reject seeds whose ideal expectation passes near zero at some depth:
  // the ratio noisy/ideal is then dominated by cancellation, not decay.
  bool accepted = false;
  std::uint64_t trial_seed = seed;
  for (int attempt = 0; attempt < kMaxSeedTries && !accepted; ++attempt, ++trial_seed) {
    draw_angles(trial_seed, max_depth, h, params);
    fit.ideal.assign(static_cast<std::size_t>(max_depth), 0.0);
    fit.noisy.assign(static_cast<std::size_t>(max_depth), 0.0);
    accepted = true;
    for (int depth = 1; depth <= max_depth; ++depth) {
      std::vector<double> prefix(params.begin(),
                                 params.begin() + static_cast<std::ptrdiff_t>(3 * kWires * depth));
      const std::vector<double> y = qsim::block_forward(kWires, depth, h, prefix, 1);
      const std::vector<double> yn = qsim::block_forward_density(kWires, depth, h, prefix, 1, p);
      fit.ideal[static_cast<std::size_t>(depth - 1)] = y[0];
      fit.noisy[static_cast<std::size_t>(depth - 1)] = yn[0];
      if (std::abs(y[0]) < 0.1 || yn[0] / y[0] <= 0.0) {
        accepted = false;
        break;
      }
    }
  }
  if (!accepted) throw std::runtime_error("deep_contraction_experiment: no well-conditioned seed found");
  fit.seed_used = trial_seed - 1;

  // Least squares for log(ratio_D) = D * log(lambda) through the origin.
  double num = 0.0;
  double den = 0.0;
  for (int depth = 1; depth <= max_depth; ++depth) {
    const double ratio = fit.noisy[static_cast<std::size_t>(depth - 1)] /
                         fit.ideal[static_cast<std::size_t>(depth - 1)];
    num += depth * std::log(ratio);
    den += static_cast<double>(depth) * depth;
  }
  fit.lambda_hat = std::exp(num / den);
  return fit;
}

}  // namespace fcvqc::theory
