#pragma once

#include <span>
#include <vector>

#include "fcvqc/qsim/ops.hpp"
#include "fcvqc/qsim/state.hpp"

namespace fcvqc::qsim {

// Run a block circuit (encoding + ansatz) on a freshly reset state.
void run_block_circuit(StateVector& psi, std::span<const GateOp> ops,
                       std::span<const double> h, std::span<const double> params);

// Quantum neuron forward pass: encode the q angles h, apply the depth-layer
// ansatz with flat parameters, measure <Z> on the first n_out wires.
// Throws std::invalid_argument on shape mismatches.
std::vector<double> block_forward(int q, int depth, std::span<const double> h,
                                  std::span<const double> params, int n_out);

}  // namespace fcvqc::qsim
