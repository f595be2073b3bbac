#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "fcvqc/network/spec.hpp"

using namespace fcvqc::network;

TEST_CASE("topology parsing") {
  REQUIRE(parse_topology("8t3t1") == std::vector<int>{8, 3, 1});
  REQUIRE(parse_topology("36") == std::vector<int>{36});
  REQUIRE(parse_topology("40t14t5t1") == std::vector<int>{40, 14, 5, 1});
  REQUIRE_THROWS_AS(parse_topology(""), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_topology("8tt1"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_topology("8t-3"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_topology("8t3x1"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_topology("0t1"), std::invalid_argument);
}

TEST_CASE("enum round-trips") {
  for (MixingRule r : {MixingRule::kParallel, MixingRule::kFullyConnected,
                       MixingRule::kSlidingWindow})
    REQUIRE(mixing_from_string(to_string(r)) == r);
  for (FeatureMap m : {FeatureMap::kIdentity, FeatureMap::kSquare, FeatureMap::kSqrt,
                       FeatureMap::kLog})
    REQUIRE(feature_map_from_string(to_string(m)) == m);
  REQUIRE_THROWS_AS(mixing_from_string("diagonal"), std::invalid_argument);
  REQUIRE_THROWS_AS(feature_map_from_string("cube"), std::invalid_argument);
}

TEST_CASE("8t3t1 layout: input, hidden, reduction, head") {
  const auto spec = make_network("8t3t1", 3, MixingRule::kFullyConnected, 3, 3);
  REQUIRE(spec.input_dim == 8);
  REQUIRE(spec.expanded_dim == 8);
  REQUIRE(spec.output_dim == 1);
  REQUIRE(spec.layers.size() == 6);  // input + 3 hidden + stage 3 + stage 1

  // Input stage: 3 blocks of q=3 (8 padded to 9), measuring all wires.
  REQUIRE(spec.layers[0].mix_before == false);
  REQUIRE(spec.layers[0].blocks.size() == 3);
  REQUIRE(spec.layers[0].in_width == 9);
  REQUIRE(spec.layers[0].out_width == 9);
  for (int l = 1; l <= 3; ++l) {
    REQUIRE(spec.layers[l].mix_before == true);
    REQUIRE(spec.layers[l].blocks.size() == 3);
    REQUIRE(spec.layers[l].out_width == 9);
  }
  // Reduction to 3: three q=3 blocks measuring one wire each.
  REQUIRE(spec.layers[4].mix_before == false);
  REQUIRE(spec.layers[4].blocks.size() == 3);
  REQUIRE(spec.layers[4].blocks[0].n_out == 1);
  REQUIRE(spec.layers[4].out_width == 3);
  // Head: one block of width 3 measuring the single output.
  REQUIRE(spec.layers[5].blocks.size() == 1);
  REQUIRE(spec.layers[5].blocks[0].q == 3);
  REQUIRE(spec.layers[5].blocks[0].n_out == 1);

  REQUIRE(spec.param_count == 432);
  REQUIRE(count_params(spec) == 432);
  REQUIRE(spec.topology_text() == "8t3t1");
}

TEST_CASE("parameter-count table cells") {
  REQUIRE(make_network("16t4t1", 4, MixingRule::kFullyConnected, 3, 3,
                       {FeatureMap::kIdentity, FeatureMap::kSquare})
              .param_count == 756);
  REQUIRE(make_network("32t11t4t1", 3, MixingRule::kSlidingWindow, 1, 1).param_count == 345);
  REQUIRE(make_network("40t14t5t1", 3, MixingRule::kSlidingWindow, 9, 9).param_count == 13014);
}

TEST_CASE("feature basis widens the input stage") {
  const auto spec = make_network("16t4t1", 4, MixingRule::kFullyConnected, 3, 3,
                                 {FeatureMap::kIdentity, FeatureMap::kSquare});
  REQUIRE(spec.input_dim == 8);    // 16 / |basis|
  REQUIRE(spec.expanded_dim == 16);
  REQUIRE(spec.layers[0].blocks.size() == 4);

  // Width not divisible by the basis size is rejected when data_dim is
  // derived.
  REQUIRE_THROWS_AS(make_network("9t3", 3, MixingRule::kParallel, 1, 1,
                                 {FeatureMap::kIdentity, FeatureMap::kSquare}),
                    std::invalid_argument);
}

TEST_CASE("explicit data_dim pins the raw feature count") {
  // Wine: 11 raw features, padded to 12 wires of q=3.
  const auto spec = make_network("12t8t6", 3, MixingRule::kSlidingWindow, 3, 9, {}, 11);
  REQUIRE(spec.input_dim == 11);
  REQUIRE(spec.expanded_dim == 11);
  REQUIRE(spec.layers[0].in_width == 12);
  REQUIRE(spec.output_dim == 6);

  // Expanded width may be quoted either exactly or padded.
  const auto exact = make_network("12", 3, MixingRule::kParallel, 1, 1, {}, 12);
  REQUIRE(exact.expanded_dim == 12);

  // Anything else is rejected.
  REQUIRE_THROWS_AS(make_network("12t8t6", 3, MixingRule::kSlidingWindow, 3, 9, {}, 7),
                    std::invalid_argument);
}

TEST_CASE("single-stage topologies are dimension-preserving") {
  const auto spec = make_network("36", 3, MixingRule::kParallel, 3, 7);
  REQUIRE(spec.layers.size() == 4);  // input + 3 hidden, no head
  REQUIRE(spec.output_dim == 36);
  REQUIRE(spec.layers.back().out_width == 36);
  REQUIRE(spec.param_count == 3 * 3 * 7 * 12 * 4);

  // Width must tile exactly: no padding allowed without a reduction stage.
  REQUIRE_THROWS_AS(make_network("8", 3, MixingRule::kParallel, 1, 1), std::invalid_argument);
}

TEST_CASE("mixing validity is enforced only when mixing sites exist") {
  // 8t3t1 with q=3 has B=3=q, so fully-connected is legal; 16 wide with q=3
  // has B=6 and is not.
  REQUIRE_THROWS_AS(make_network("16t4t1", 3, MixingRule::kFullyConnected, 3, 3),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_network("12t4", 4, MixingRule::kSlidingWindow, 2, 1),
                    std::invalid_argument);  // even q
  // With zero hidden layers there are no mixing sites, so the rule is moot.
  REQUIRE_NOTHROW(make_network("12t4", 3, MixingRule::kFullyConnected, 0, 1));
}

TEST_CASE("definition validation") {
  REQUIRE_THROWS_AS(make_network("8t3t1", 0, MixingRule::kParallel, 1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_network("8t3t1", 13, MixingRule::kParallel, 1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_network("8t3t1", 3, MixingRule::kParallel, -1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_network("8t3t1", 3, MixingRule::kParallel, 1, 0),
                    std::invalid_argument);
  // Stages must strictly decrease.
  REQUIRE_THROWS_AS(make_network("8t8t1", 3, MixingRule::kParallel, 1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_network("8t3t4", 3, MixingRule::kParallel, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("monolith layout") {
  const auto mono = make_monolith(8, 1, 1, 9);
  REQUIRE(mono.monolith);
  REQUIRE(mono.layers.size() == 1);
  REQUIRE(mono.layers[0].blocks.size() == 1);
  REQUIRE(mono.layers[0].blocks[0].q == 8);
  REQUIRE(mono.layers[0].blocks[0].n_out == 1);
  REQUIRE(mono.param_count == 3 * 8 * 9);

  const auto deep = make_monolith(4, 2, 3, 2);
  REQUIRE(deep.layers.size() == 3);
  REQUIRE(deep.layers[0].blocks[0].n_out == 4);  // re-encode everything
  REQUIRE(deep.layers[1].blocks[0].n_out == 4);
  REQUIRE(deep.layers[2].blocks[0].n_out == 2);  // head measures the outputs
  REQUIRE(deep.param_count == 3 * 4 * 2 * 3);

  REQUIRE_THROWS_AS(make_monolith(8, 9, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(make_monolith(8, 0, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(make_monolith(8, 1, 0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(make_monolith(13, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("parameter offsets tile the flat vector contiguously") {
  const auto spec = make_network("8t3t1", 3, MixingRule::kFullyConnected, 2, 2);
  std::size_t expect = 0;
  for (const auto& layer : spec.layers)
    for (const auto& block : layer.blocks) {
      REQUIRE(block.param_offset == expect);
      expect += static_cast<std::size_t>(3) * block.q * spec.depth;
    }
  REQUIRE(expect == spec.param_count);
}

TEST_CASE("default mixing rule selection") {
  REQUIRE(default_mixing(9, 3) == MixingRule::kFullyConnected);
  REQUIRE(default_mixing(16, 4) == MixingRule::kFullyConnected);
  REQUIRE(default_mixing(12, 3) == MixingRule::kSlidingWindow);
  REQUIRE(default_mixing(40, 5) == MixingRule::kSlidingWindow);
  REQUIRE(default_mixing(8, 2) == MixingRule::kParallel);
  REQUIRE(default_mixing(12, 4) == MixingRule::kParallel);
  REQUIRE_THROWS_AS(default_mixing(0, 3), std::invalid_argument);
}
