#pragma once

#include <cstdint>
#include <vector>

#include "fcvqc/network/spec.hpp"

namespace fcvqc::theory {

// One cell of the noise-robustness verification grid for the layer-wise
// error bound E||H_noisy - H_ideal||_2 <= sum_l (B_l + sqrt(d / S_l)):
// measure-and-re-encode keeps every inter-layer operator a permutation
// (spectral norm 1), so the products of downstream norms drop out.
struct NoiseBoundPoint {
  double p = 0.0;
  std::uint64_t shots = 0;  // 0 = infinite
  int quantum_layers = 1;   // L: input layer + (L-1) hidden layers
  int trials = 0;
  double lhs_mean = 0.0;            // empirical E||H_noisy - H_ideal||_2
  double rhs = 0.0;                 // analytic bound
  std::vector<double> layer_bias;   // B_l, sampled sup of the per-layer bias

  bool holds() const { return lhs_mean <= rhs; }
};

struct NoiseBoundConfig {
  int q = 3;
  int blocks = 3;
  int depth = 3;  // K
  network::MixingRule mixing = network::MixingRule::kFullyConnected;
  int trials = 200;        // input (and noise) draws for the empirical side
  int bias_samples = 100;  // input draws for the per-layer bias sup
  std::uint64_t seed = 42;
};

// Analytic right-hand side for unit-norm mixing.
double noise_bound_rhs(const std::vector<double>& layer_bias, int width,
                       std::uint64_t shots);

// Per-layer deterministic bias B_l: sup over sampled inputs of the L2 gap
// between the exact noisy layer map (density path) and the ideal layer map,
// evaluated on ideal activations propagated to that layer.
std::vector<double> estimate_layer_bias(const network::NetworkSpec& spec,
                                        const std::vector<double>& params, double p,
                                        int samples, std::uint64_t seed);

// Run one grid cell: builds the q x blocks dimension-preserving network with
// L quantum layers, draws random parameters from the seed, and measures both
// sides of the bound.
NoiseBoundPoint verify_noise_bound_point(const NoiseBoundConfig& cfg, double p,
                                         std::uint64_t shots, int quantum_layers);

}  // namespace fcvqc::theory
