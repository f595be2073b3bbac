#include "fcvqc/network/spec.hpp"

#include <stdexcept>

#include "fcvqc/util/text.hpp"

namespace fcvqc::network {

namespace {

constexpr int kMaxBlockWidth = 12;  // statevector cost is 2^q; keep blocks sane

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void append_uniform_layer(NetworkSpec& spec, bool mix_before, int blocks, int q, int n_out) {
  LayerPlan layer;
  layer.mix_before = mix_before;
  layer.in_width = blocks * q;
  layer.out_width = blocks * n_out;
  layer.blocks.reserve(blocks);
  for (int b = 0; b < blocks; ++b) {
    BlockPlan bp;
    bp.q = q;
    bp.n_out = n_out;
    bp.param_offset = spec.param_count;
    spec.param_count += static_cast<std::size_t>(3) * q * spec.depth;
    layer.blocks.push_back(bp);
  }
  spec.layers.push_back(std::move(layer));
}

void check_block_width(int q, const std::string& what) {
  if (q < 1 || q > kMaxBlockWidth)
    throw std::invalid_argument(what + " must lie in [1, " +
                                std::to_string(kMaxBlockWidth) + "], got " + std::to_string(q));
}

}  // namespace

const char* to_string(MixingRule rule) {
  switch (rule) {
    case MixingRule::kParallel: return "parallel";
    case MixingRule::kFullyConnected: return "fully_connected";
    case MixingRule::kSlidingWindow: return "sliding_window";
  }
  return "?";
}

const char* to_string(FeatureMap map) {
  switch (map) {
    case FeatureMap::kIdentity: return "identity";
    case FeatureMap::kSquare: return "square";
    case FeatureMap::kSqrt: return "sqrt";
    case FeatureMap::kLog: return "log";
  }
  return "?";
}

MixingRule mixing_from_string(const std::string& name) {
  if (name == "parallel") return MixingRule::kParallel;
  if (name == "fully_connected") return MixingRule::kFullyConnected;
  if (name == "sliding_window") return MixingRule::kSlidingWindow;
  throw std::invalid_argument("unknown mixing rule '" + name +
                              "' (parallel | fully_connected | sliding_window)");
}

FeatureMap feature_map_from_string(const std::string& name) {
  if (name == "identity") return FeatureMap::kIdentity;
  if (name == "square") return FeatureMap::kSquare;
  if (name == "sqrt") return FeatureMap::kSqrt;
  if (name == "log") return FeatureMap::kLog;
  throw std::invalid_argument("unknown feature map '" + name +
                              "' (identity | square | sqrt | log)");
}

std::string NetworkSpec::topology_text() const {
  std::string s;
  for (std::size_t i = 0; i < stage_dims.size(); ++i) {
    if (i) s += 't';
    s += std::to_string(stage_dims[i]);
  }
  return s;
}

std::vector<int> parse_topology(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("topology string is empty");
  std::vector<int> dims;
  for (const std::string& field : split(text, 't')) {
    if (field.empty())
      throw std::invalid_argument("topology '" + text + "' has an empty field");
    for (char c : field)
      if (c < '0' || c > '9')
        throw std::invalid_argument("topology '" + text + "' has a non-numeric field '" +
                                    field + "'");
    const long v = parse_long(field, "topology field");
    if (v < 1 || v > 100000)
      throw std::invalid_argument("topology '" + text + "' has out-of-range field '" +
                                  field + "'");
    dims.push_back(static_cast<int>(v));
  }
  return dims;
}

NetworkSpec make_network(const std::string& topology, int block_width,
                         MixingRule mixing, int hidden_layers, int depth,
                         std::vector<FeatureMap> feature_basis, int data_dim) {
  NetworkSpec spec;
  spec.stage_dims = parse_topology(topology);
  spec.block_width = block_width;
  spec.mixing = mixing;
  spec.hidden_layers = hidden_layers;
  spec.depth = depth;
  spec.feature_basis = std::move(feature_basis);

  check_block_width(block_width, "block width");
  if (hidden_layers < 0) throw std::invalid_argument("hidden layer count must be >= 0");
  if (depth < 1) throw std::invalid_argument("ansatz depth must be >= 1");
  if (data_dim < 0) throw std::invalid_argument("data dim must be >= 0");
  for (std::size_t s = 1; s < spec.stage_dims.size(); ++s)
    if (spec.stage_dims[s] >= spec.stage_dims[s - 1])
      throw std::invalid_argument("topology stages must strictly decrease, got " + topology);

  const int q = block_width;
  const int m = spec.feature_basis.empty() ? 1 : static_cast<int>(spec.feature_basis.size());
  const int stage0 = spec.stage_dims.front();
  if (data_dim == 0) {
    if (stage0 % m != 0)
      throw std::invalid_argument("topology width " + std::to_string(stage0) +
                                  " is not divisible by the basis size " + std::to_string(m));
    spec.input_dim = stage0 / m;
    spec.expanded_dim = stage0;
  } else {
    spec.input_dim = data_dim;
    spec.expanded_dim = data_dim * m;
    const int padded = ceil_div(spec.expanded_dim, q) * q;
    if (stage0 != spec.expanded_dim && stage0 != padded)
      throw std::invalid_argument("topology width " + std::to_string(stage0) +
                                  " matches neither the expanded input dim " +
                                  std::to_string(spec.expanded_dim) + " nor its padded width " +
                                  std::to_string(padded));
  }
  spec.output_dim = spec.stage_dims.back();

  const int b0 = ceil_div(spec.expanded_dim, q);
  if (spec.stage_dims.size() == 1 && spec.expanded_dim % q != 0)
    throw std::invalid_argument(
        "dimension-preserving topology needs width divisible by block width, got " +
        std::to_string(spec.expanded_dim) + " / " + std::to_string(q));

  if (hidden_layers > 0) {
    if (mixing == MixingRule::kFullyConnected && b0 != q)
      throw std::invalid_argument(
          "fully_connected mixing requires block count == block width, got B=" +
          std::to_string(b0) + ", q=" + std::to_string(q));
    if (mixing == MixingRule::kSlidingWindow && (q % 2 == 0 || q < 3))
      throw std::invalid_argument("sliding_window mixing requires odd block width >= 3");
  }

  // Input stage plus L hidden layers, all dimension-preserving.
  append_uniform_layer(spec, false, b0, q, q);
  for (int l = 0; l < hidden_layers; ++l) append_uniform_layer(spec, true, b0, q, q);

  // Reduction chain.
  int prev_actual = b0 * q;
  for (std::size_t s = 1; s < spec.stage_dims.size(); ++s) {
    const int target = spec.stage_dims[s];
    if (s + 1 == spec.stage_dims.size()) {
      // Final stage: one block spanning the previous nominal width.
      const int qf = spec.stage_dims[s - 1];
      check_block_width(qf, "final-stage block width (previous stage dim)");
      if (target > qf)
        throw std::invalid_argument("final stage cannot measure more wires than its width");
      append_uniform_layer(spec, false, 1, qf, target);
      prev_actual = target;
    } else {
      const int bs = ceil_div(prev_actual, q);
      const int n_out = target / bs;
      if (n_out < 1)
        throw std::invalid_argument("stage " + std::to_string(target) +
                                    " of '" + topology + "' is too narrow for " +
                                    std::to_string(bs) + " blocks");
      append_uniform_layer(spec, false, bs, q, n_out);
      prev_actual = bs * n_out;
    }
  }
  return spec;
}

NetworkSpec make_monolith(int input_dim, int output_dim, int hidden_layers, int depth) {
  NetworkSpec spec;
  spec.monolith = true;
  spec.stage_dims = {input_dim, output_dim};
  spec.block_width = input_dim;
  spec.mixing = MixingRule::kParallel;
  spec.hidden_layers = hidden_layers;
  spec.depth = depth;
  spec.input_dim = input_dim;
  spec.output_dim = output_dim;
  spec.expanded_dim = input_dim;

  check_block_width(input_dim, "monolith width");
  if (hidden_layers < 1) throw std::invalid_argument("monolith needs >= 1 circuit");
  if (depth < 1) throw std::invalid_argument("ansatz depth must be >= 1");
  if (output_dim < 1 || output_dim > input_dim)
    throw std::invalid_argument("monolith output dim must lie in [1, input dim]");

  for (int l = 0; l < hidden_layers; ++l) {
    const bool last = l + 1 == hidden_layers;
    append_uniform_layer(spec, false, 1, input_dim, last ? output_dim : input_dim);
  }
  return spec;
}

std::size_t count_params(const NetworkSpec& spec) {
  std::size_t total = 0;
  for (const LayerPlan& layer : spec.layers)
    for (const BlockPlan& block : layer.blocks)
      total += static_cast<std::size_t>(3) * block.q * spec.depth;
  return total;
}

MixingRule default_mixing(int expanded_dim, int block_width) {
  if (block_width < 1 || expanded_dim < 1)
    throw std::invalid_argument("default_mixing: dimensions must be positive");
  const int b0 = (expanded_dim + block_width - 1) / block_width;
  if (b0 == block_width) return MixingRule::kFullyConnected;
  if (block_width >= 3 && block_width % 2 == 1) return MixingRule::kSlidingWindow;
  return MixingRule::kParallel;
}

}  // namespace fcvqc::network
