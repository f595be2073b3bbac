#include "fcvqc/theory/noise_bound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fcvqc/network/forward.hpp"
#include "fcvqc/qsim/block.hpp"
#include "fcvqc/qsim/noise.hpp"
#include "fcvqc/util/rng.hpp"

namespace fcvqc::theory {

namespace {

network::NetworkSpec build_grid_network(const NoiseBoundConfig& cfg, int quantum_layers) {
  if (quantum_layers < 1)
    throw std::invalid_argument("noise bound: quantum layer count must be >= 1");
  const int d = cfg.q * cfg.blocks;
  return network::make_network(std::to_string(d), cfg.q, cfg.mixing,
                               quantum_layers - 1, cfg.depth);
}

}  // namespace

double noise_bound_rhs(const std::vector<double>& layer_bias, int width,
                       std::uint64_t shots) {
  const double shot_term =
      shots == 0 ? 0.0 : std::sqrt(static_cast<double>(width) / static_cast<double>(shots));
  double rhs = 0.0;
  for (double b : layer_bias) rhs += b + shot_term;
  return rhs;
}

std::vector<double> estimate_layer_bias(const network::NetworkSpec& spec,
                                        const std::vector<double>& params, double p,
                                        int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("estimate_layer_bias: samples must be >= 1");
  std::mt19937_64 rng = make_rng(seed, 0xB1A5);
  std::vector<double> x(spec.input_dim);
  std::vector<double> bias(spec.layers.size(), 0.0);
  network::ForwardCache cache;

  for (int s = 0; s < samples; ++s) {
    for (double& v : x) v = uniform_range(rng, -1.0, 1.0);
    network::net_forward(spec, params, x, &cache);  // ideal activations per layer
    for (std::size_t li = 0; li < spec.layers.size(); ++li) {
      const network::LayerPlan& layer = spec.layers[li];
      const std::vector<double>& layer_in = cache.layer_inputs[li];
      double sq = 0.0;
      std::size_t in_off = 0;
      for (const network::BlockPlan& block : layer.blocks) {
        const std::span<const double> h(layer_in.data() + in_off, block.q);
        const std::span<const double> bp(params.data() + block.param_offset,
                                         qsim::block_param_count(block.q, spec.depth));
        const std::vector<double> noisy =
            qsim::block_forward_density(block.q, spec.depth, h, bp, block.n_out, p);
        const std::vector<double> ideal =
            qsim::block_forward(block.q, spec.depth, h, bp, block.n_out);
        for (int i = 0; i < block.n_out; ++i) {
          const double diff = noisy[i] - ideal[i];
          sq += diff * diff;
        }
        in_off += block.q;
      }
      bias[li] = std::max(bias[li], std::sqrt(sq));
    }
  }
  return bias;
}

NoiseBoundPoint verify_noise_bound_point(const NoiseBoundConfig& cfg, double p,
                                         std::uint64_t shots, int quantum_layers) {
  const network::NetworkSpec spec = build_grid_network(cfg, quantum_layers);
  const int d = cfg.q * cfg.blocks;

  std::mt19937_64 init_rng = make_rng(cfg.seed, 0x111D + quantum_layers);
  const std::vector<double> params = network::init_params(spec, init_rng);

  NoiseBoundPoint point;
  point.p = p;
  point.shots = shots;
  point.quantum_layers = quantum_layers;
  point.trials = cfg.trials;
  point.layer_bias = estimate_layer_bias(spec, params, p, cfg.bias_samples, cfg.seed);
  point.rhs = noise_bound_rhs(point.layer_bias, d, shots);

  qsim::NoiseConfig noise;
  noise.p = p;
  noise.shots = shots;
  noise.trajectories = 0;  // exact density path when shots are infinite

  std::mt19937_64 x_rng = make_rng(cfg.seed, 0x77AA + quantum_layers);
  std::vector<double> x(d);
  double acc = 0.0;
  for (int t = 0; t < cfg.trials; ++t) {
    for (double& v : x) v = uniform_range(x_rng, -1.0, 1.0);
    std::mt19937_64 noise_rng = make_rng(cfg.seed, 0x5150 + 977u * t + quantum_layers);
    const std::vector<double> ideal = network::net_forward(spec, params, x);
    const std::vector<double> noisy =
        network::net_forward_noisy(spec, params, x, noise, noise_rng);
    double sq = 0.0;
    for (std::size_t i = 0; i < ideal.size(); ++i)
      sq += (noisy[i] - ideal[i]) * (noisy[i] - ideal[i]);
    acc += std::sqrt(sq);
  }
  point.lhs_mean = acc / cfg.trials;
  return point;
}

}  // namespace fcvqc::theory
