#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fcvqc/network/spec.hpp"

namespace fcvqc::theory {

// Empirical receptive field of a dimension-preserving network: mask[b_out][b_in]
// is true when perturbing input block b_in (coordinates scaled by probe_eps)
// moves some coordinate of output block b_out by more than threshold, maxed
// over base points and probe directions.
std::vector<std::vector<bool>> probe_receptive_field(
    const network::NetworkSpec& spec, std::span<const double> params,
    int base_points, int directions, double probe_eps, double threshold,
    std::uint64_t seed);

// Theoretical mask for the same geometry: Parallel keeps blocks independent;
// FullyConnected reaches every block after one mixing site; SlidingWindow
// with radius r = (q-1)/2 and L mixing sites reaches the circular window of
// half-width L*r (capped at B blocks).
std::vector<std::vector<bool>> expected_receptive_field(const network::NetworkSpec& spec);

}  // namespace fcvqc::theory
