#include "fcvqc/network/feature.hpp"

#include <cmath>
#include <stdexcept>

#include "fcvqc/util/text.hpp"

namespace fcvqc::network {

double apply_feature_map(FeatureMap map, double x) {
  switch (map) {
    case FeatureMap::kIdentity:
      return x;
    case FeatureMap::kSquare:
      return x * x;
    case FeatureMap::kSqrt:
      return x < 0.0 ? -std::sqrt(-x) : std::sqrt(x);
    case FeatureMap::kLog: {
      const double shifted = x + 1e-6;
      if (shifted <= 0.0)
        throw std::domain_error("log feature map on non-positive value " + format_double(x));
      return std::log(shifted);
    }
  }
  throw std::logic_error("unreachable feature map");
}

std::vector<double> feature_expand(std::span<const double> x,
                                   const std::vector<FeatureMap>& basis) {
  if (basis.empty()) return {x.begin(), x.end()};
  std::vector<double> out;
  out.reserve(x.size() * basis.size());
  for (FeatureMap map : basis)
    for (double v : x) out.push_back(apply_feature_map(map, v));
  return out;
}

}  // namespace fcvqc::network
