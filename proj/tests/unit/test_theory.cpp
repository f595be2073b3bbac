#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fcvqc/network/forward.hpp"
#include "fcvqc/theory/contraction.hpp"
#include "fcvqc/theory/mismatch.hpp"
#include "fcvqc/theory/noise_bound.hpp"
#include "fcvqc/theory/receptive.hpp"
#include "fcvqc/util/rng.hpp"

using namespace fcvqc;
using namespace fcvqc::theory;
using network::MixingRule;
using Catch::Matchers::WithinAbs;

TEST_CASE("mismatch target matches the frozen reference point") {
  // Amplitudes pinned explicitly so default tuning cannot move the oracle.
  MismatchConfig cfg;
  cfg.c_separable = 0.40;
  cfg.c_local = 0.30;
  cfg.c_global = 0.26;
  const std::vector<double> x = {0.1, -0.2, 0.3, 0.4,  -0.5, 0.6,
                                 -0.7, 0.8, -0.9, 1.0, -1.1, 1.2};
  const std::vector<double> expect = {
      0.06910569233362604,  0.0755534925468449,   0.01412944470930469,
      0.4810521878587825,   0.49622983075143,     0.3754041241866019,
      -0.19659276315718507, -0.2546859801785738,  -0.17823709281417996,
      0.20219077495053395,  0.24561911260097746,  0.11298008442350072};
  const std::vector<double> y = mismatch_target(x, cfg);
  REQUIRE(y.size() == 12);
  for (int j = 0; j < 12; ++j)
    REQUIRE_THAT(y[static_cast<std::size_t>(j)],
                 WithinAbs(expect[static_cast<std::size_t>(j)], 1e-12));

  REQUIRE_THROWS_AS(mismatch_target(std::vector<double>(11, 0.0), cfg),
                    std::invalid_argument);
}

TEST_CASE("mismatch target is bounded by the amplitude sum") {
  const MismatchConfig cfg;  // defaults
  const double bound = cfg.c_separable + cfg.c_local + cfg.c_global;
  REQUIRE(bound <= 1.0);  // representable by Z expectations
  auto rng = make_rng(1234, 0);
  std::vector<double> x(12);
  for (int t = 0; t < 200; ++t) {
    for (double& v : x) v = uniform_range(rng, -1.0, 1.0);
    for (double v : mismatch_target(x, cfg)) REQUIRE(std::abs(v) <= bound);
  }
}

TEST_CASE("mismatch target components read exactly their stated blocks") {
  auto rng = make_rng(77, 1);
  std::vector<double> x(12), x2(12);
  for (double& v : x) v = uniform_range(rng, -1.0, 1.0);

  const auto perturb_block = [&](int b) {
    x2 = x;
    for (int i = 0; i < 3; ++i) x2[static_cast<std::size_t>(3 * b + i)] += 0.3;
  };
  const auto moved = [](const std::vector<double>& a, const std::vector<double>& b,
                        int block) {
    for (int i = 0; i < 3; ++i)
      if (a[static_cast<std::size_t>(3 * block + i)] !=
          b[static_cast<std::size_t>(3 * block + i)])
        return true;
    return false;
  };

  SECTION("separable part depends on the own block only") {
    MismatchConfig cfg;
    cfg.c_local = cfg.c_global = 0.0;
    const auto y0 = mismatch_target(x, cfg);
    perturb_block(1);
    const auto y1 = mismatch_target(x2, cfg);
    REQUIRE(moved(y0, y1, 1));
    REQUIRE_FALSE(moved(y0, y1, 0));
    REQUIRE_FALSE(moved(y0, y1, 2));
    REQUIRE_FALSE(moved(y0, y1, 3));
  }
  SECTION("local part reads the two ring neighbours") {
    MismatchConfig cfg;
    cfg.c_separable = cfg.c_global = 0.0;
    const auto y0 = mismatch_target(x, cfg);
    perturb_block(0);
    const auto y1 = mismatch_target(x2, cfg);
    REQUIRE(moved(y0, y1, 1));   // b=1 reads s_0 as its previous block
    REQUIRE(moved(y0, y1, 3));   // b=3 reads s_0 as its next block
    REQUIRE_FALSE(moved(y0, y1, 0));
    REQUIRE_FALSE(moved(y0, y1, 2));
  }
  SECTION("global part reads the opposite block") {
    MismatchConfig cfg;
    cfg.c_separable = cfg.c_local = 0.0;
    const auto y0 = mismatch_target(x, cfg);
    perturb_block(0);
    const auto y1 = mismatch_target(x2, cfg);
    REQUIRE(moved(y0, y1, 2));   // s_{b+2} with b=2 is block 0
    REQUIRE_FALSE(moved(y0, y1, 0));
    REQUIRE_FALSE(moved(y0, y1, 1));
    REQUIRE_FALSE(moved(y0, y1, 3));
  }
}

TEST_CASE("mismatch chain predicate applies multiplicative slack") {
  MismatchResult res;
  res.parallel.final_mse = {0.06, 0.06};
  res.sliding.final_mse = {0.04, 0.04};
  res.fully.final_mse = {0.02, 0.02};
  REQUIRE(res.chain_holds(0.05));

  res.fully.final_mse = {0.045, 0.045};  // above sliding * 1.05
  REQUIRE_FALSE(res.chain_holds(0.05));

  res.fully.final_mse = {0.041, 0.041};  // inside the slack
  REQUIRE(res.chain_holds(0.05));

  REQUIRE(MismatchArmResult{}.mean_mse() == 0.0);
}

TEST_CASE("expected receptive fields per mixing rule") {
  const auto diag_only = [](const std::vector<std::vector<bool>>& m) {
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c)
        if (m[r][c] != (r == c)) return false;
    return true;
  };

  // Parallel: diagonal regardless of depth.
  REQUIRE(diag_only(expected_receptive_field(
      network::make_network("12", 3, MixingRule::kParallel, 2, 1))));

  // Fully connected: everything after one mixing site, diagonal with none.
  const auto fc1 = expected_receptive_field(
      network::make_network("9", 3, MixingRule::kFullyConnected, 1, 1));
  for (const auto& row : fc1)
    for (bool v : row) REQUIRE(v);
  REQUIRE(diag_only(expected_receptive_field(
      network::make_network("9", 3, MixingRule::kFullyConnected, 0, 1))));

  // Sliding window: circular window of half-width L * (q-1)/2.
  const auto sw1 = expected_receptive_field(
      network::make_network("15", 3, MixingRule::kSlidingWindow, 1, 1));
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      int dist = std::abs(r - c);
      dist = std::min(dist, 5 - dist);
      REQUIRE(sw1[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == (dist <= 1));
    }
  const auto sw2 = expected_receptive_field(
      network::make_network("21", 3, MixingRule::kSlidingWindow, 2, 1));
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) {
      int dist = std::abs(r - c);
      dist = std::min(dist, 7 - dist);
      REQUIRE(sw2[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == (dist <= 2));
    }

  // Reduction networks have no single block geometry to probe.
  REQUIRE_THROWS_AS(expected_receptive_field(network::make_network(
                        "8t3t1", 3, MixingRule::kFullyConnected, 1, 1)),
                    std::invalid_argument);
}

TEST_CASE("probed receptive fields match the theoretical masks") {
  const struct {
    const char* topology;
    MixingRule rule;
  } cases[] = {
      {"12", MixingRule::kParallel},
      {"15", MixingRule::kSlidingWindow},
      {"9", MixingRule::kFullyConnected},
  };
  for (const auto& c : cases) {
    const auto spec = network::make_network(c.topology, 3, c.rule, 1, 2);
    auto rng = make_rng(505, 1);
    const auto params = network::init_params(spec, rng);
    const auto probed = probe_receptive_field(spec, params, 4, 3, 0.5, 1e-7, 606);
    REQUIRE(probed == expected_receptive_field(spec));
  }

  const auto spec = network::make_network("12", 3, MixingRule::kParallel, 1, 1);
  auto rng = make_rng(505, 1);
  const auto params = network::init_params(spec, rng);
  REQUIRE_THROWS_AS(probe_receptive_field(spec, params, 0, 1, 0.5, 1e-7, 1),
                    std::invalid_argument);
}

TEST_CASE("noise bound right-hand side formula") {
  const std::vector<double> bias = {0.1, 0.2};
  REQUIRE_THAT(noise_bound_rhs(bias, 9, 0), WithinAbs(0.3, 1e-15));
  // Finite shots add sqrt(d/S) once per quantum layer.
  REQUIRE_THAT(noise_bound_rhs(bias, 9, 900), WithinAbs(0.3 + 2.0 * 0.1, 1e-12));
  REQUIRE(noise_bound_rhs({}, 9, 100) == 0.0);
}

TEST_CASE("layer bias vanishes without noise") {
  const auto spec = network::make_network("9", 3, MixingRule::kFullyConnected, 1, 2);
  auto rng = make_rng(11, 2);
  const auto params = network::init_params(spec, rng);
  for (double b : estimate_layer_bias(spec, params, 0.0, 5, 3)) {
    REQUIRE(b >= 0.0);
    REQUIRE(b <= 1e-10);
  }
  REQUIRE_THROWS_AS(estimate_layer_bias(spec, params, 0.0, 0, 3), std::invalid_argument);
}

TEST_CASE("noise bound holds at a noiseless and a noisy grid point") {
  NoiseBoundConfig cfg;
  cfg.q = 3;
  cfg.blocks = 3;
  cfg.depth = 2;
  cfg.trials = 20;
  cfg.bias_samples = 10;

  const NoiseBoundPoint clean = verify_noise_bound_point(cfg, 0.0, 0, 2);
  REQUIRE(clean.lhs_mean <= 1e-10);
  REQUIRE(clean.holds());

  const NoiseBoundPoint noisy = verify_noise_bound_point(cfg, 0.05, 0, 2);
  REQUIRE(noisy.lhs_mean > 1e-4);  // depolarizing genuinely moves the output
  REQUIRE(noisy.rhs > noisy.lhs_mean);
  REQUIRE(noisy.holds());

  const NoiseBoundPoint shots = verify_noise_bound_point(cfg, 0.02, 256, 2);
  REQUIRE(shots.holds());
  // The shot term is part of the bound: removing it must shrink the rhs.
  REQUIRE(shots.rhs > noise_bound_rhs(shots.layer_bias, 9, 0));
}

TEST_CASE("contraction experiment recovers lambda = 1 - p") {
  const ContractionFit fit = deep_contraction_experiment(0.02, 12, 5);
  REQUIRE_THAT(fit.lambda_true, WithinAbs(0.98, 1e-15));
  REQUIRE(fit.relative_error() < 0.05);
  REQUIRE(fit.ideal.size() == 12);
  for (std::size_t d = 0; d < 12; ++d) {
    REQUIRE(std::abs(fit.ideal[d]) >= 0.1);  // seed-retry contract
    REQUIRE(fit.noisy[d] / fit.ideal[d] > 0.0);
    REQUIRE(std::abs(fit.noisy[d]) <= std::abs(fit.ideal[d]));  // noise shrinks
  }

  // Deterministic: the same call reproduces the same fit and seed choice.
  const ContractionFit again = deep_contraction_experiment(0.02, 12, 5);
  REQUIRE(again.lambda_hat == fit.lambda_hat);
  REQUIRE(again.seed_used == fit.seed_used);

  REQUIRE_THROWS_AS(deep_contraction_experiment(0.0, 8, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(deep_contraction_experiment(1.0, 8, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(deep_contraction_experiment(0.1, 1, 5), std::invalid_argument);
}
