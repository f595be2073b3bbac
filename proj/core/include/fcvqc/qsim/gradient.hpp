#pragma once

#include <span>
#include <vector>

#include "fcvqc/qsim/ops.hpp"

namespace fcvqc::qsim {

// Gradients of the scalar E = sum_i upstream[i] * <Z_i> with respect to the
// block's ansatz parameters and its encoding angles.
struct BlockGrad {
  std::vector<double> d_params;  // 3*q*depth
  std::vector<double> d_inputs;  // q
};

// Adjoint-mode differentiation: one forward pass plus a reverse sweep that
// unwinds each gate, O(#gates) state applications total. For every rotation
// G = exp(-i*theta*P/2) the contribution is Im(<lambda|P|phi>) with phi the
// post-gate state and lambda the back-propagated observable state.
BlockGrad block_gradient(int q, int depth, std::span<const double> h,
                         std::span<const double> params,
                         std::span<const double> upstream);

// Same adjoint sweep over a prebuilt circuit template (no shape checks);
// lets callers in hot loops reuse the op list across blocks.
BlockGrad block_gradient_ops(std::span<const GateOp> ops, int q,
                             std::span<const double> h,
                             std::span<const double> params,
                             std::span<const double> upstream);

// Parameter-shift rule: dE/dtheta = (E(theta + pi/2) - E(theta - pi/2)) / 2,
// exact for rotation generators with eigenvalues +-1/2. Two circuit
// evaluations per parameter; used as an independent oracle for the adjoint.
BlockGrad block_gradient_shift(int q, int depth, std::span<const double> h,
                               std::span<const double> params,
                               std::span<const double> upstream);

}  // namespace fcvqc::qsim
