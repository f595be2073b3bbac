#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fcvqc/qsim/state.hpp"

namespace fcvqc::qsim {

// Hardware-imperfection model for one block evaluation: a per-qubit
// depolarizing channel of strength p after every ansatz layer (not after the
// encoding layer), and a finite number of measurement shots per readout wire.
struct NoiseConfig {
  double p = 0.0;            // depolarizing probability, in [0, 1]
  std::uint64_t shots = 0;   // 0 means infinite shots (exact expectations)
  int trajectories = 0;      // >0: average that many stochastic unravelings
                             // when estimating exact expectations under p > 0;
                             // 0: use the deterministic density-matrix path

  bool infinite_shots() const { return shots == 0; }
};

// Noisy quantum neuron forward pass.
//  - p == 0, shots == inf: identical to block_forward (same code path).
//  - p == 0, finite shots: each wire's <Z> replaced by the mean of S
//    independent +-1 Bernoulli draws with P(+1) = (1 + <Z>)/2.
//  - p > 0, shots == inf: exact noisy expectations via the density-matrix
//    path, or an average over cfg.trajectories stochastic Pauli unravelings
//    when trajectories > 0.
//  - p > 0, finite shots: S independent trajectories, one Bernoulli readout
//    per wire each — every shot sees fresh noise and fresh measurement.
// Wires are sampled independently; cross-wire correlations are ignored.
std::vector<double> block_forward_noisy(int q, int depth, std::span<const double> h,
                                        std::span<const double> params, int n_out,
                                        const NoiseConfig& cfg, std::mt19937_64& rng);

// One stochastic unraveling of the depolarizing channel: after each ansatz
// layer, each qubit suffers a uniformly random Pauli {X, Y, Z} with
// probability 3p/4. Returns the exact <Z> vector of that trajectory.
std::vector<double> block_forward_trajectory(int q, int depth, std::span<const double> h,
                                             std::span<const double> params, int n_out,
                                             double p, std::mt19937_64& rng);

// Dense 2^q x 2^q density matrix, row-major, same wire convention as
// StateVector. Supports q <= 6.
class DensityMatrix {
 public:
  explicit DensityMatrix(int num_wires);

  int num_wires() const { return q_; }
  std::size_t dim() const { return dim_; }
  cplx& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }

  void reset();  // |0...0><0...0|

  void apply_ry(int wire, double angle);
  void apply_rz(int wire, double angle);
  void apply_cnot(int control, int target);
  // Per-qubit depolarizing channel: rho -> (1-p) rho + p I/2 on `wire`.
  void depolarize(int wire, double p);

  double expectation_z(int wire) const;
  double trace_real() const;

 private:
  void apply_1q(int wire, cplx a, cplx b, cplx c, cplx d);

  int q_;
  std::size_t dim_;
  std::vector<cplx> m_;
};

// Exact noisy expectations: evolve the density matrix through the block
// circuit with the depolarizing channel after each ansatz layer.
std::vector<double> block_forward_density(int q, int depth, std::span<const double> h,
                                          std::span<const double> params, int n_out,
                                          double p);

}  // namespace fcvqc::qsim
