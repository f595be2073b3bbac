#include "fcvqc/qsim/block.hpp"

#include <stdexcept>
#include <string>

namespace fcvqc::qsim {

void run_block_circuit(StateVector& psi, std::span<const GateOp> ops,
                       std::span<const double> h, std::span<const double> params) {
  for (const GateOp& op : ops) {
    switch (op.kind) {
      case GateOp::kRY:
        psi.apply_ry(op.wire, op_angle(op, h, params));
        break;
      case GateOp::kRZ:
        psi.apply_rz(op.wire, op_angle(op, h, params));
        break;
      case GateOp::kCNOT:
        psi.apply_cnot(op.wire, op.target);
        break;
    }
  }
}

std::vector<double> block_forward(int q, int depth, std::span<const double> h,
                                  std::span<const double> params, int n_out) {
  if (static_cast<int>(h.size()) != q)
    throw std::invalid_argument("block_forward: expected " + std::to_string(q) +
                                " encoding angles, got " + std::to_string(h.size()));
  if (params.size() != block_param_count(q, depth))
    throw std::invalid_argument("block_forward: expected " +
                                std::to_string(block_param_count(q, depth)) +
                                " ansatz parameters, got " + std::to_string(params.size()));
  if (n_out < 1 || n_out > q)
    throw std::invalid_argument("block_forward: n_out must be in [1, q]");

  const std::vector<GateOp> ops = build_block_ops(q, depth);
  StateVector psi(q);
  run_block_circuit(psi, ops, h, params);

  std::vector<double> out(n_out);
  for (int i = 0; i < n_out; ++i) out[i] = psi.expectation_z(i);
  return out;
}

}  // namespace fcvqc::qsim
