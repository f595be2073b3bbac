#include "fcvqc/theory/receptive.hpp"

#include <cmath>
#include <stdexcept>

#include "fcvqc/network/forward.hpp"
#include "fcvqc/util/rng.hpp"

namespace fcvqc::theory {

namespace {

struct BlockGeometry {
  int blocks;
  int q;
};

BlockGeometry geometry(const network::NetworkSpec& spec) {
  const auto& first = spec.layers.front();
  const auto& last = spec.layers.back();
  if (first.out_width != last.out_width || first.in_width != first.out_width)
    throw std::invalid_argument(
        "receptive-field probing needs a dimension-preserving network");
  return {static_cast<int>(first.blocks.size()), first.blocks.front().q};
}

}  // namespace

std::vector<std::vector<bool>> probe_receptive_field(
    const network::NetworkSpec& spec, std::span<const double> params,
    int base_points, int directions, double probe_eps, double threshold,
    std::uint64_t seed) {
  if (base_points < 1 || directions < 1)
    throw std::invalid_argument("probe_receptive_field: need >= 1 base point and direction");
  const BlockGeometry geo = geometry(spec);
  const int d = spec.input_dim;

  std::vector<std::vector<bool>> mask(geo.blocks, std::vector<bool>(geo.blocks, false));
  std::mt19937_64 rng = make_rng(seed, 0xF1E1D);
  std::vector<double> x(d), x_pert(d);

  for (int bp = 0; bp < base_points; ++bp) {
    for (double& v : x) v = uniform_range(rng, -1.0, 1.0);
    const std::vector<double> y0 = network::net_forward(spec, params, x);
    for (int b_in = 0; b_in < geo.blocks; ++b_in) {
      for (int dir = 0; dir < directions; ++dir) {
        x_pert = x;
        for (int i = 0; i < geo.q; ++i) {
          const int slot = b_in * geo.q + i;
          if (slot < d) x_pert[slot] += probe_eps * uniform_range(rng, -1.0, 1.0);
        }
        const std::vector<double> y1 = network::net_forward(spec, params, x_pert);
        for (int b_out = 0; b_out < geo.blocks; ++b_out) {
          if (mask[b_out][b_in]) continue;
          double delta = 0.0;
          for (int i = 0; i < geo.q; ++i)
            delta = std::max(delta, std::abs(y1[b_out * geo.q + i] - y0[b_out * geo.q + i]));
          if (delta > threshold) mask[b_out][b_in] = true;
        }
      }
    }
  }
  return mask;
}

std::vector<std::vector<bool>> expected_receptive_field(const network::NetworkSpec& spec) {
  const BlockGeometry geo = geometry(spec);
  const int sites = spec.hidden_layers;  // one mixing site per hidden layer
  std::vector<std::vector<bool>> mask(geo.blocks, std::vector<bool>(geo.blocks, false));

  for (int b_out = 0; b_out < geo.blocks; ++b_out) {
    switch (spec.mixing) {
      case network::MixingRule::kParallel:
        mask[b_out][b_out] = true;
        break;
      case network::MixingRule::kFullyConnected:
        for (int b_in = 0; b_in < geo.blocks; ++b_in)
          mask[b_out][b_in] = sites >= 1 || b_in == b_out;
        break;
      case network::MixingRule::kSlidingWindow: {
        const int radius = sites * ((geo.q - 1) / 2);
        for (int b_in = 0; b_in < geo.blocks; ++b_in) {
          int dist = std::abs(b_in - b_out);
          dist = std::min(dist, geo.blocks - dist);  // circular distance
          mask[b_out][b_in] = dist <= radius;
        }
        break;
      }
    }
  }
  return mask;
}

}  // namespace fcvqc::theory
