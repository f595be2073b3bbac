#include "fcvqc/network/forward.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "fcvqc/network/feature.hpp"
#include "fcvqc/network/mixing.hpp"
#include "fcvqc/qsim/block.hpp"
#include "fcvqc/qsim/gradient.hpp"
#include "fcvqc/util/rng.hpp"

namespace fcvqc::network {

namespace {

void check_x(const NetworkSpec& spec, std::span<const double> x) {
  if (static_cast<int>(x.size()) != spec.input_dim)
    throw std::invalid_argument("net_forward: expected " + std::to_string(spec.input_dim) +
                                " features, got " + std::to_string(x.size()));
}

void check_params(const NetworkSpec& spec, std::span<const double> params) {
  if (params.size() != spec.param_count)
    throw std::invalid_argument("net_forward: expected " + std::to_string(spec.param_count) +
                                " parameters, got " + std::to_string(params.size()));
}

// Small per-call cache: blocks of equal width share one circuit template.
struct OpsCache {
  int depth;
  std::vector<std::pair<int, std::vector<qsim::GateOp>>> entries;

  const std::vector<qsim::GateOp>& get(int q) {
    for (auto& [qq, ops] : entries)
      if (qq == q) return ops;
    entries.emplace_back(q, qsim::build_block_ops(q, depth));
    return entries.back().second;
  }
};

}  // namespace

std::vector<double> init_params(const NetworkSpec& spec, std::mt19937_64& rng) {
  std::vector<double> params(spec.param_count);
  for (double& p : params) p = uniform_range(rng, -std::numbers::pi, std::numbers::pi);
  return params;
}

std::vector<double> net_forward(const NetworkSpec& spec, std::span<const double> params,
                                std::span<const double> x, ForwardCache* cache) {
  check_x(spec, x);
  check_params(spec, params);
  if (cache) {
    cache->layer_inputs.clear();
    cache->layer_inputs.reserve(spec.layers.size());
  }

  OpsCache ops_cache{spec.depth, {}};
  std::vector<double> cur = feature_expand(x, spec.feature_basis);
  std::vector<double> mixed;
  for (const LayerPlan& layer : spec.layers) {
    if (layer.mix_before) {
      const int q = layer.blocks.front().q;
      const int b = static_cast<int>(layer.blocks.size());
      mixed.assign(cur.size(), 0.0);
      mix_forward(spec.mixing, cur, mixed, b, q);
      cur.swap(mixed);
    }
    cur.resize(layer.in_width, 0.0);  // zero-pad up to the block array width
    if (cache) cache->layer_inputs.push_back(cur);

    std::vector<double> out;
    out.reserve(layer.out_width);
    std::size_t in_off = 0;
    qsim::StateVector psi(layer.blocks.front().q);
    for (const BlockPlan& block : layer.blocks) {
      const auto& ops = ops_cache.get(block.q);
      if (psi.num_wires() != block.q) psi = qsim::StateVector(block.q);
      psi.reset();
      qsim::run_block_circuit(psi, ops,
                              std::span<const double>(cur.data() + in_off, block.q),
                              params.subspan(block.param_offset,
                                             qsim::block_param_count(block.q, spec.depth)));
      for (int i = 0; i < block.n_out; ++i) out.push_back(psi.expectation_z(i));
      in_off += block.q;
    }
    cur = std::move(out);
  }
  return cur;
}

std::vector<double> net_backward(const NetworkSpec& spec, std::span<const double> params,
                                 const ForwardCache& cache,
                                 std::span<const double> upstream) {
  check_params(spec, params);
  if (cache.layer_inputs.size() != spec.layers.size())
    throw std::invalid_argument("net_backward: cache does not match the network layout");
  const LayerPlan& last = spec.layers.back();
  if (static_cast<int>(upstream.size()) != last.out_width)
    throw std::invalid_argument("net_backward: upstream size != network output width");

  OpsCache ops_cache{spec.depth, {}};
  std::vector<double> grad(spec.param_count, 0.0);
  std::vector<double> up(upstream.begin(), upstream.end());
  std::vector<double> d_in;
  std::vector<double> routed;

  for (std::size_t li = spec.layers.size(); li-- > 0;) {
    const LayerPlan& layer = spec.layers[li];
    const std::vector<double>& layer_in = cache.layer_inputs[li];
    d_in.assign(layer.in_width, 0.0);

    std::size_t in_off = 0;
    std::size_t out_off = 0;
    for (const BlockPlan& block : layer.blocks) {
      const auto& ops = ops_cache.get(block.q);
      const std::size_t np = qsim::block_param_count(block.q, spec.depth);
      const qsim::BlockGrad bg = qsim::block_gradient_ops(
          ops, block.q, std::span<const double>(layer_in.data() + in_off, block.q),
          params.subspan(block.param_offset, np),
          std::span<const double>(up.data() + out_off, block.n_out));
      for (std::size_t m = 0; m < np; ++m) grad[block.param_offset + m] = bg.d_params[m];
      for (int i = 0; i < block.q; ++i) d_in[in_off + i] = bg.d_inputs[i];
      in_off += block.q;
      out_off += block.n_out;
    }

    if (li == 0) break;  // gradient w.r.t. the expanded input is not needed

    // Drop padded slots: the previous layer produced only out_width values.
    const int prev_w = spec.layers[li - 1].out_width;
    d_in.resize(prev_w);
    if (layer.mix_before) {
      const int q = layer.blocks.front().q;
      const int b = static_cast<int>(layer.blocks.size());
      routed.assign(d_in.size(), 0.0);
      mix_backward(spec.mixing, d_in, routed, b, q);
      d_in.swap(routed);
    }
    up = d_in;
  }
  return grad;
}

std::vector<double> net_forward_noisy(const NetworkSpec& spec, std::span<const double> params,
                                      std::span<const double> x,
                                      const qsim::NoiseConfig& noise, std::mt19937_64& rng) {
  check_x(spec, x);
  check_params(spec, params);

  std::vector<double> cur = feature_expand(x, spec.feature_basis);
  std::vector<double> mixed;
  for (const LayerPlan& layer : spec.layers) {
    if (layer.mix_before) {
      const int q = layer.blocks.front().q;
      const int b = static_cast<int>(layer.blocks.size());
      mixed.assign(cur.size(), 0.0);
      mix_forward(spec.mixing, cur, mixed, b, q);
      cur.swap(mixed);
    }
    cur.resize(layer.in_width, 0.0);

    std::vector<double> out;
    out.reserve(layer.out_width);
    std::size_t in_off = 0;
    for (const BlockPlan& block : layer.blocks) {
      const std::vector<double> z = qsim::block_forward_noisy(
          block.q, spec.depth, std::span<const double>(cur.data() + in_off, block.q),
          params.subspan(block.param_offset,
                         qsim::block_param_count(block.q, spec.depth)),
          block.n_out, noise, rng);
      out.insert(out.end(), z.begin(), z.end());
      in_off += block.q;
    }
    cur = std::move(out);
  }
  return cur;
}

}  // namespace fcvqc::network
