#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace fcvqc::theory {

// Deep-circuit contraction experiment: under per-layer depolarizing noise of
// strength p, a traceless observable's expectation contracts by lambda = 1-p
// per layer, so the noisy/ideal ratio of a depth-D circuit decays like
// lambda^D. Runs a fixed random q=2 circuit at depths 1..max_depth (depth D
// uses the first D ansatz layers of one angle tensor), computes both sides
// exactly, and fits log(ratio) = D log(lambda) through the origin.
struct ContractionFit {
  double p = 0.0;
  double lambda_true = 1.0;   // 1 - p
  double lambda_hat = 1.0;    // fitted
  std::vector<double> ideal;  // y_D, D = 1..max_depth
  std::vector<double> noisy;  // noisy expectation at depth D
  std::uint64_t seed_used = 0;

  double relative_error() const {
    return std::abs(lambda_hat - lambda_true) / lambda_true;
  }
};

// Seeds are retried (seed, seed+1, ...) until the ideal expectation stays
// away from zero (|y_D| >= 0.1 for all D) so the log-ratio fit is well
// conditioned; the accepted seed is reported.
ContractionFit deep_contraction_experiment(double p, int max_depth, std::uint64_t seed);

}  // namespace fcvqc::theory
