#pragma once

#include <random>
#include <span>
#include <vector>

#include "fcvqc/network/spec.hpp"
#include "fcvqc/qsim/noise.hpp"

namespace fcvqc::network {

// Per-layer activations recorded during a forward pass; everything the
// adjoint backward sweep needs to recompute block states.
struct ForwardCache {
  // Per layer: the post-mix, zero-padded vector actually fed to the blocks.
  std::vector<std::vector<double>> layer_inputs;
};

// Uniform [-pi, pi] initialization of the flat parameter vector.
std::vector<double> init_params(const NetworkSpec& spec, std::mt19937_64& rng);

// Full network forward pass: feature expansion, then for each layer mixing
// (hidden layers), zero-padding, and per-block encode-evolve-measure.
// Returns the output_dim expectation vector, each entry in [-1, 1].
std::vector<double> net_forward(const NetworkSpec& spec, std::span<const double> params,
                                std::span<const double> x, ForwardCache* cache = nullptr);

// Reverse sweep for the scalar sum_i upstream[i] * out[i]: per-block adjoint
// gradients, gradient routing through padding (dropped) and mixing (inverse
// permutation). Returns the flat parameter gradient.
std::vector<double> net_backward(const NetworkSpec& spec, std::span<const double> params,
                                 const ForwardCache& cache,
                                 std::span<const double> upstream);

// Forward pass with every block evaluated under the noise model (depolarizing
// strength p per ansatz layer, finite measurement shots). With p = 0 and
// infinite shots this is bit-identical to net_forward.
std::vector<double> net_forward_noisy(const NetworkSpec& spec, std::span<const double> params,
                                      std::span<const double> x,
                                      const qsim::NoiseConfig& noise, std::mt19937_64& rng);

}  // namespace fcvqc::network
