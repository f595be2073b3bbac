#include "fcvqc/qsim/noise.hpp"

#include <algorithm>
#include <stdexcept>

#include "fcvqc/qsim/block.hpp"
#include "fcvqc/util/rng.hpp"

namespace fcvqc::qsim {

namespace {

void check_noise(const NoiseConfig& cfg) {
  if (cfg.p < 0.0 || cfg.p > 1.0)
    throw std::invalid_argument("noise: p must lie in [0, 1]");
  if (cfg.trajectories < 0)
    throw std::invalid_argument("noise: trajectory count must be >= 0");
}

// +-1 sample of a wire with exact expectation z.
double shot_sample(double z, std::mt19937_64& rng) {
  const double prob_up = std::clamp(0.5 * (1.0 + z), 0.0, 1.0);
  return uniform_double(rng) < prob_up ? 1.0 : -1.0;
}

}  // namespace

std::vector<double> block_forward_trajectory(int q, int depth, std::span<const double> h,
                                             std::span<const double> params, int n_out,
                                             double p, std::mt19937_64& rng) {
  if (static_cast<int>(h.size()) != q)
    throw std::invalid_argument("block_forward_trajectory: encoding angle count != q");
  if (params.size() != block_param_count(q, depth))
    throw std::invalid_argument("block_forward_trajectory: parameter count mismatch");
  if (n_out < 1 || n_out > q)
    throw std::invalid_argument("block_forward_trajectory: n_out must be in [1, q]");

  StateVector psi(q);
  for (int j = 0; j < q; ++j) psi.apply_ry(j, h[j]);
  for (int k = 0; k < depth; ++k) {
    for (int j = 0; j < q; ++j) {
      const std::size_t base = 3 * (static_cast<std::size_t>(k) * q + j);
      psi.apply_rz(j, params[base + 2]);
      psi.apply_ry(j, params[base + 1]);
      psi.apply_rz(j, params[base + 0]);
    }
    if (q >= 2) {
      const int r = entangler_range(k + 1, q);
      for (int j = 0; j < q; ++j) psi.apply_cnot(j, (j + r) % q);
    }
    // Stochastic unraveling of the depolarizing channel: each qubit suffers a
    // uniformly random Pauli with probability 3p/4.
    for (int j = 0; j < q; ++j) {
      if (uniform_double(rng) < 0.75 * p) {
        switch (uniform_below(rng, 3)) {
          case 0: psi.apply_x(j); break;
          case 1: psi.apply_y(j); break;
          default: psi.apply_z(j); break;
        }
      }
    }
  }
  std::vector<double> out(n_out);
  for (int i = 0; i < n_out; ++i) out[i] = psi.expectation_z(i);
  return out;
}

std::vector<double> block_forward_noisy(int q, int depth, std::span<const double> h,
                                        std::span<const double> params, int n_out,
                                        const NoiseConfig& cfg, std::mt19937_64& rng) {
  check_noise(cfg);
  if (cfg.p == 0.0 && cfg.infinite_shots())
    return block_forward(q, depth, h, params, n_out);

  if (cfg.p == 0.0) {
    // Exact state, finite shots: S independent +-1 draws per wire.
    const std::vector<double> exact = block_forward(q, depth, h, params, n_out);
    std::vector<double> out(n_out, 0.0);
    for (int i = 0; i < n_out; ++i) {
      double acc = 0.0;
      for (std::uint64_t s = 0; s < cfg.shots; ++s) acc += shot_sample(exact[i], rng);
      out[i] = acc / static_cast<double>(cfg.shots);
    }
    return out;
  }

  if (cfg.infinite_shots()) {
    if (cfg.trajectories == 0)
      return block_forward_density(q, depth, h, params, n_out, cfg.p);
    std::vector<double> out(n_out, 0.0);
    for (int t = 0; t < cfg.trajectories; ++t) {
      const std::vector<double> z =
          block_forward_trajectory(q, depth, h, params, n_out, cfg.p, rng);
      for (int i = 0; i < n_out; ++i) out[i] += z[i];
    }
    for (double& v : out) v /= cfg.trajectories;
    return out;
  }

  // Finite shots under noise: every shot sees a fresh noise realization and a
  // fresh measurement (the honest finite-S readout estimator).
  std::vector<double> out(n_out, 0.0);
  for (std::uint64_t s = 0; s < cfg.shots; ++s) {
    const std::vector<double> z =
        block_forward_trajectory(q, depth, h, params, n_out, cfg.p, rng);
    for (int i = 0; i < n_out; ++i) out[i] += shot_sample(z[i], rng);
  }
  for (double& v : out) v /= static_cast<double>(cfg.shots);
  return out;
}

DensityMatrix::DensityMatrix(int num_wires) : q_(num_wires) {
  if (num_wires < 1 || num_wires > 6)
    throw std::invalid_argument("density matrix supports 1..6 wires");
  dim_ = std::size_t{1} << q_;
  m_.assign(dim_ * dim_, cplx{0.0, 0.0});
  m_[0] = cplx{1.0, 0.0};
}

void DensityMatrix::reset() {
  std::fill(m_.begin(), m_.end(), cplx{0.0, 0.0});
  m_[0] = cplx{1.0, 0.0};
}

void DensityMatrix::apply_1q(int wire, cplx g00, cplx g01, cplx g10, cplx g11) {
  const std::size_t st = std::size_t{1} << (q_ - 1 - wire);
  // rho <- G rho : mix row pairs within each column.
  for (std::size_t base = 0; base < dim_; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t r0 = base + off;
      const std::size_t r1 = r0 + st;
      for (std::size_t col = 0; col < dim_; ++col) {
        const cplx v0 = at(r0, col);
        const cplx v1 = at(r1, col);
        at(r0, col) = g00 * v0 + g01 * v1;
        at(r1, col) = g10 * v0 + g11 * v1;
      }
    }
  }
  // rho <- rho G^dagger : mix column pairs within each row.
  for (std::size_t base = 0; base < dim_; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t c0 = base + off;
      const std::size_t c1 = c0 + st;
      for (std::size_t row = 0; row < dim_; ++row) {
        const cplx v0 = at(row, c0);
        const cplx v1 = at(row, c1);
        at(row, c0) = v0 * std::conj(g00) + v1 * std::conj(g01);
        at(row, c1) = v0 * std::conj(g10) + v1 * std::conj(g11);
      }
    }
  }
}

void DensityMatrix::apply_ry(int wire, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  apply_1q(wire, cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0});
}

void DensityMatrix::apply_rz(int wire, double angle) {
  const cplx p0{std::cos(0.5 * angle), -std::sin(0.5 * angle)};
  apply_1q(wire, p0, cplx{0, 0}, cplx{0, 0}, std::conj(p0));
}

void DensityMatrix::apply_cnot(int control, int target) {
  if (control == target) throw std::invalid_argument("cnot: control == target");
  const std::size_t cm = std::size_t{1} << (q_ - 1 - control);
  const std::size_t tm = std::size_t{1} << (q_ - 1 - target);
  for (std::size_t r = 0; r < dim_; ++r) {
    if ((r & cm) && !(r & tm)) {
      for (std::size_t col = 0; col < dim_; ++col) std::swap(at(r, col), at(r | tm, col));
    }
  }
  for (std::size_t c = 0; c < dim_; ++c) {
    if ((c & cm) && !(c & tm)) {
      for (std::size_t row = 0; row < dim_; ++row) std::swap(at(row, c), at(row, c | tm));
    }
  }
}

void DensityMatrix::depolarize(int wire, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarize: p must lie in [0, 1]");
  const std::size_t st = std::size_t{1} << (q_ - 1 - wire);
  // In the wire's 2x2 sub-blocks the channel mixes the two populations toward
  // each other and damps both coherences by (1-p).
  for (std::size_t rb = 0; rb < dim_; rb += 2 * st) {
    for (std::size_t ro = 0; ro < st; ++ro) {
      const std::size_t r0 = rb + ro;
      const std::size_t r1 = r0 + st;
      for (std::size_t cb = 0; cb < dim_; cb += 2 * st) {
        for (std::size_t co = 0; co < st; ++co) {
          const std::size_t c0 = cb + co;
          const std::size_t c1 = c0 + st;
          const cplx a = at(r0, c0);
          const cplx d = at(r1, c1);
          at(r0, c0) = (1.0 - 0.5 * p) * a + 0.5 * p * d;
          at(r1, c1) = (1.0 - 0.5 * p) * d + 0.5 * p * a;
          at(r0, c1) *= 1.0 - p;
          at(r1, c0) *= 1.0 - p;
        }
      }
    }
  }
}

double DensityMatrix::expectation_z(int wire) const {
  const std::size_t st = std::size_t{1} << (q_ - 1 - wire);
  double e = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double d = at(i, i).real();
    e += (i & st) ? -d : d;
  }
  return e;
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i).real();
  return t;
}

std::vector<double> block_forward_density(int q, int depth, std::span<const double> h,
                                          std::span<const double> params, int n_out,
                                          double p) {
  if (static_cast<int>(h.size()) != q)
    throw std::invalid_argument("block_forward_density: encoding angle count != q");
  if (params.size() != block_param_count(q, depth))
    throw std::invalid_argument("block_forward_density: parameter count mismatch");
  if (n_out < 1 || n_out > q)
    throw std::invalid_argument("block_forward_density: n_out must be in [1, q]");

  DensityMatrix rho(q);
  for (int j = 0; j < q; ++j) rho.apply_ry(j, h[j]);
  for (int k = 0; k < depth; ++k) {
    for (int j = 0; j < q; ++j) {
      const std::size_t base = 3 * (static_cast<std::size_t>(k) * q + j);
      rho.apply_rz(j, params[base + 2]);
      rho.apply_ry(j, params[base + 1]);
      rho.apply_rz(j, params[base + 0]);
    }
    if (q >= 2) {
      const int r = entangler_range(k + 1, q);
      for (int j = 0; j < q; ++j) rho.apply_cnot(j, (j + r) % q);
    }
    for (int j = 0; j < q; ++j) rho.depolarize(j, p);
  }
  std::vector<double> out(n_out);
  for (int i = 0; i < n_out; ++i) out[i] = rho.expectation_z(i);
  return out;
}

}  // namespace fcvqc::qsim
