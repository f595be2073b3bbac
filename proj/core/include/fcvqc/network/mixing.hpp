#pragma once

#include <span>
#include <vector>

#include "fcvqc/network/spec.hpp"

namespace fcvqc::network {

// Deterministic, parameter-free block-mixing permutations on a full-width
// vector of B blocks x q components (block-major storage: component i of
// block b sits at index b*q + i). All rules are permutation matrices, so
// their spectral norm is exactly 1.
//
//   Parallel:        identity — blocks stay independent.
//   FullyConnected:  requires B == q; output block b collects component b of
//                    every block: out[b*q + i] = in[i*q + b] (the transpose,
//                    an involution).
//   SlidingWindow:   requires odd q, radius r = (q-1)/2; output block b takes
//                    component i from block (b - r + i) mod B:
//                    out[b*q + i] = in[((b - r + i) mod B)*q + i].
//
// mixing_permutation returns perm with out[dst] = in[perm[dst]].
std::vector<std::size_t> mixing_permutation(MixingRule rule, int blocks, int q);

void mix_forward(MixingRule rule, std::span<const double> in, std::span<double> out,
                 int blocks, int q);

// Routes gradients back through the permutation (its transpose/inverse).
void mix_backward(MixingRule rule, std::span<const double> upstream, std::span<double> out,
                  int blocks, int q);

}  // namespace fcvqc::network
