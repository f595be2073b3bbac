#include "fcvqc/qsim/gradient.hpp"

#include <stdexcept>

#include "fcvqc/qsim/block.hpp"

namespace fcvqc::qsim {

namespace {

void check_shapes(int q, int depth, std::span<const double> h,
                  std::span<const double> params, std::span<const double> upstream) {
  if (static_cast<int>(h.size()) != q)
    throw std::invalid_argument("block_gradient: encoding angle count != q");
  if (params.size() != block_param_count(q, depth))
    throw std::invalid_argument("block_gradient: ansatz parameter count mismatch");
  if (upstream.empty() || static_cast<int>(upstream.size()) > q)
    throw std::invalid_argument("block_gradient: upstream size must be in [1, q]");
}

// Im(<lambda| Z_w |phi>)
double im_lambda_z_phi(const StateVector& lambda, const StateVector& phi, int wire) {
  const std::size_t st = std::size_t{1} << (lambda.num_wires() - 1 - wire);
  const std::size_t n = lambda.size();
  const cplx* l = lambda.data();
  const cplx* f = phi.data();
  cplx s{0.0, 0.0};
  for (std::size_t base = 0; base < n; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + st;
      s += std::conj(l[i0]) * f[i0] - std::conj(l[i1]) * f[i1];
    }
  }
  return s.imag();
}

// Im(<lambda| Y_w |phi>)
double im_lambda_y_phi(const StateVector& lambda, const StateVector& phi, int wire) {
  const std::size_t st = std::size_t{1} << (lambda.num_wires() - 1 - wire);
  const std::size_t n = lambda.size();
  const cplx* l = lambda.data();
  const cplx* f = phi.data();
  const cplx im{0.0, 1.0};
  cplx s{0.0, 0.0};
  for (std::size_t base = 0; base < n; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + st;
      s += std::conj(l[i0]) * (-im * f[i1]) + std::conj(l[i1]) * (im * f[i0]);
    }
  }
  return s.imag();
}

double weighted_expectation(const StateVector& psi, std::span<const double> upstream) {
  double e = 0.0;
  for (std::size_t i = 0; i < upstream.size(); ++i)
    e += upstream[i] * psi.expectation_z(static_cast<int>(i));
  return e;
}

}  // namespace

BlockGrad block_gradient(int q, int depth, std::span<const double> h,
                         std::span<const double> params,
                         std::span<const double> upstream) {
  check_shapes(q, depth, h, params, upstream);
  const std::vector<GateOp> ops = build_block_ops(q, depth);
  return block_gradient_ops(ops, q, h, params, upstream);
}

BlockGrad block_gradient_ops(std::span<const GateOp> ops, int q,
                             std::span<const double> h,
                             std::span<const double> params,
                             std::span<const double> upstream) {
  StateVector phi(q);
  run_block_circuit(phi, ops, h, params);

  // lambda = O_eff |psi> with O_eff = sum_i upstream[i] Z_i; O_eff is diagonal.
  StateVector lambda(q);
  {
    const std::size_t n = phi.size();
    for (std::size_t j = 0; j < n; ++j) {
      double coef = 0.0;
      for (std::size_t i = 0; i < upstream.size(); ++i) {
        const std::size_t bit = (j >> (q - 1 - static_cast<int>(i))) & 1u;
        coef += bit ? -upstream[i] : upstream[i];
      }
      lambda.data()[j] = coef * phi.data()[j];
    }
  }

  BlockGrad grad;
  grad.d_params.assign(params.size(), 0.0);
  grad.d_inputs.assign(q, 0.0);

  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const GateOp& op = *it;
    if (op.kind == GateOp::kCNOT) {
      phi.apply_cnot(op.wire, op.target);
      lambda.apply_cnot(op.wire, op.target);
      continue;
    }
    const double angle = op_angle(op, h, params);
    const double g = op.kind == GateOp::kRY ? im_lambda_y_phi(lambda, phi, op.wire)
                                            : im_lambda_z_phi(lambda, phi, op.wire);
    if (op.slot < q)
      grad.d_inputs[op.slot] += g;
    else
      grad.d_params[op.slot - q] += g;
    if (op.kind == GateOp::kRY) {
      phi.apply_ry(op.wire, -angle);
      lambda.apply_ry(op.wire, -angle);
    } else {
      phi.apply_rz(op.wire, -angle);
      lambda.apply_rz(op.wire, -angle);
    }
  }
  return grad;
}

BlockGrad block_gradient_shift(int q, int depth, std::span<const double> h,
                               std::span<const double> params,
                               std::span<const double> upstream) {
  check_shapes(q, depth, h, params, upstream);
  const std::vector<GateOp> ops = build_block_ops(q, depth);
  constexpr double kShift = 1.5707963267948966;  // pi/2

  std::vector<double> h_work(h.begin(), h.end());
  std::vector<double> p_work(params.begin(), params.end());
  StateVector psi(q);

  const auto eval = [&]() {
    psi.reset();
    run_block_circuit(psi, ops, h_work, p_work);
    return weighted_expectation(psi, upstream);
  };

  BlockGrad grad;
  grad.d_inputs.resize(q);
  grad.d_params.resize(p_work.size());
  for (int j = 0; j < q; ++j) {
    const double saved = h_work[j];
    h_work[j] = saved + kShift;
    const double plus = eval();
    h_work[j] = saved - kShift;
    const double minus = eval();
    h_work[j] = saved;
    grad.d_inputs[j] = 0.5 * (plus - minus);
  }
  for (std::size_t m = 0; m < p_work.size(); ++m) {
    const double saved = p_work[m];
    p_work[m] = saved + kShift;
    const double plus = eval();
    p_work[m] = saved - kShift;
    const double minus = eval();
    p_work[m] = saved;
    grad.d_params[m] = 0.5 * (plus - minus);
  }
  return grad;
}

}  // namespace fcvqc::qsim
