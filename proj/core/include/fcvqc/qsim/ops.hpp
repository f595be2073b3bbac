#pragma once

#include <span>
#include <vector>

namespace fcvqc::qsim {

// One gate of a block circuit. Rotation gates carry the parameter slot they
// read: slot < q refers to encoding angle h[slot]; slot >= q refers to ansatz
// parameter (slot - q) in the block's flat parameter vector.
struct GateOp {
  enum Kind { kRY, kRZ, kCNOT };
  Kind kind;
  int wire;    // rotation wire, or CNOT control
  int target;  // CNOT target; -1 for rotations
  int slot;    // parameter slot as above; -1 for CNOT
};

// Entangler range for 1-based ansatz layer k on q qubits:
// r_k = ((k-1) mod (q-1)) + 1. Requires q >= 2.
int entangler_range(int layer_1based, int q);

// Circuit template for one block: q encoding R_Y gates, then `depth` ansatz
// layers. Each ansatz layer applies, per wire, the Euler rotation
// U = R_Z(omega) R_Y(theta) R_Z(phi) — i.e. gates in order R_Z(phi),
// R_Y(theta), R_Z(omega) — followed (for q >= 2) by the cyclic entangler ring
// CNOT(j, (j + r_k) mod q) for every wire j.
//
// Flat ansatz parameters are ordered [layer][wire][omega, theta, phi],
// 3*q*depth values total.
std::vector<GateOp> build_block_ops(int q, int depth);

// Number of ansatz parameters for one block: 3 * q * depth.
inline std::size_t block_param_count(int q, int depth) {
  return static_cast<std::size_t>(3) * q * depth;
}

// Angle an op reads from (encoding inputs h, flat ansatz params).
inline double op_angle(const GateOp& op, std::span<const double> h,
                       std::span<const double> params) {
  return op.slot < static_cast<int>(h.size()) ? h[op.slot]
                                              : params[op.slot - h.size()];
}

}  // namespace fcvqc::qsim
