#include "fcvqc/qsim/ops.hpp"

#include <stdexcept>

namespace fcvqc::qsim {

int entangler_range(int layer_1based, int q) {
  if (q < 2) throw std::invalid_argument("entangler_range requires q >= 2");
  if (layer_1based < 1) throw std::invalid_argument("entangler layer index is 1-based");
  return ((layer_1based - 1) % (q - 1)) + 1;
}

std::vector<GateOp> build_block_ops(int q, int depth) {
  if (q < 1) throw std::invalid_argument("block requires q >= 1");
  if (depth < 1) throw std::invalid_argument("block requires depth >= 1");
  std::vector<GateOp> ops;
  ops.reserve(static_cast<std::size_t>(q) + static_cast<std::size_t>(depth) * q * 4);
  for (int j = 0; j < q; ++j) ops.push_back({GateOp::kRY, j, -1, j});
  for (int k = 0; k < depth; ++k) {
    for (int j = 0; j < q; ++j) {
      const int base = q + 3 * (k * q + j);  // [omega, theta, phi]
      ops.push_back({GateOp::kRZ, j, -1, base + 2});
      ops.push_back({GateOp::kRY, j, -1, base + 1});
      ops.push_back({GateOp::kRZ, j, -1, base + 0});
    }
    if (q >= 2) {
      const int r = entangler_range(k + 1, q);
      for (int j = 0; j < q; ++j) ops.push_back({GateOp::kCNOT, j, (j + r) % q, -1});
    }
  }
  return ops;
}

}  // namespace fcvqc::qsim
