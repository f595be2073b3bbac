#pragma once

#include <span>
#include <vector>

#include "fcvqc/network/spec.hpp"

namespace fcvqc::network {

// Apply one feature map to a scalar. Maps are total on standardized data:
//   identity  x
//   square    x^2
//   sqrt      sign(x) * sqrt(|x|)   (odd-root extension, features may be < 0)
//   log       log(x + 1e-6)         (throws for x <= -1e-6; pipelines that
//                                    enable it min-shift features to
//                                    positivity at ingestion)
double apply_feature_map(FeatureMap map, double x);

// Basis-major expansion: [f0(x), f1(x), ...] concatenated, d * |basis| values.
// An empty basis is the identity (no expansion).
std::vector<double> feature_expand(std::span<const double> x,
                                   const std::vector<FeatureMap>& basis);

}  // namespace fcvqc::network
