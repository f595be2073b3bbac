#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fcvqc::network {

enum class MixingRule { kParallel, kFullyConnected, kSlidingWindow };

enum class FeatureMap { kIdentity, kSquare, kSqrt, kLog };

const char* to_string(MixingRule rule);
const char* to_string(FeatureMap map);
MixingRule mixing_from_string(const std::string& name);
FeatureMap feature_map_from_string(const std::string& name);

// One quantum neuron inside a resolved layer.
struct BlockPlan {
  int q = 0;                     // wires
  int n_out = 0;                 // measured wires (first n_out)
  std::size_t param_offset = 0;  // into the network's flat parameter vector
};

// One measure-and-re-encode layer.
struct LayerPlan {
  bool mix_before = false;  // apply the mixing permutation to the incoming
                            // full-width vector (hidden layers only)
  int in_width = 0;         // wires consumed = sum of block q (zero-padded)
  int out_width = 0;        // sum of block n_out
  std::vector<BlockPlan> blocks;
};

// A fully resolved multi-layer FC-VQC: definition fields plus the concrete
// per-layer block layout and flat-parameter geometry.
struct NetworkSpec {
  // --- definition ---
  std::vector<int> stage_dims;          // topology d0 t d1 t ... t dS
  int block_width = 3;                  // q at full-width stages
  MixingRule mixing = MixingRule::kParallel;
  int hidden_layers = 1;                // L
  int depth = 1;                        // K (ansatz layers per block)
  std::vector<FeatureMap> feature_basis;  // empty: no expansion
  bool monolith = false;                // single full-width circuit stack

  // --- resolved ---
  int input_dim = 0;    // raw feature count before expansion
  int output_dim = 0;
  int expanded_dim = 0; // after feature expansion
  std::vector<LayerPlan> layers;
  std::size_t param_count = 0;

  std::string topology_text() const;  // "16t4t1" (staged kinds only)
};

// "8t3t1" -> {8, 3, 1}. Separator 't', every field a positive integer.
std::vector<int> parse_topology(const std::string& text);

// Build and validate a staged (reduction or dimension-preserving) network.
//
// The first topology entry names the expanded input width d_ext (feature
// count times basis size), or its zero-padded block width when the feature
// count does not tile evenly (e.g. "12t8t6" over 11 raw features with q=3).
// data_dim pins the raw feature count; 0 derives it as stage0 / basis size.
//
// Layer layout, with d_ext the expanded input dimension and q the block
// width: the input stage uses B0 = ceil(d_ext / q) blocks, zero-padding the
// input to B0*q wires, each measuring all q wires; L hidden layers repeat
// that shape, each preceded by one mixing site. Every intermediate reduction
// stage with nominal width d_s uses B_s = ceil(prev_actual / q) blocks (the
// incoming vector is zero-padded to B_s*q) measuring floor(d_s / B_s) wires
// each; the final stage is a single block of width d_{S-1} measuring d_S
// wires. A single-stage topology ("36") has no reduction chain: the last
// hidden layer is the output layer.
NetworkSpec make_network(const std::string& topology, int block_width,
                         MixingRule mixing, int hidden_layers, int depth,
                         std::vector<FeatureMap> feature_basis = {}, int data_dim = 0);

// Build a monolithic stack (SingleVQC): hidden_layers blocks of width
// input_dim; every block but the last measures and re-encodes all wires, the
// last measures output_dim wires. hidden_layers == 1 is the plain
// encode-evolve-measure circuit.
NetworkSpec make_monolith(int input_dim, int output_dim, int hidden_layers, int depth);

// Total trainable parameter count: sum of 3 * q_b * K over all blocks.
std::size_t count_params(const NetworkSpec& spec);

// Mixing rule used when a config does not pin one: fully-connected when the
// input stage is square (B0 == q), else sliding-window when q is odd (>= 3),
// else parallel.
MixingRule default_mixing(int expanded_dim, int block_width);

}  // namespace fcvqc::network
