#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fcvqc::qsim {

using cplx = std::complex<double>;

// Dense q-qubit statevector. Wire 0 is the most significant bit of the
// amplitude index: the bit of wire w in index i is (i >> (q-1-w)) & 1, so
// for q=2 the basis order is |00>, |01>, |10>, |11>.
class StateVector {
 public:
  explicit StateVector(int num_wires);

  int num_wires() const { return q_; }
  std::size_t size() const { return amp_.size(); }
  cplx* data() { return amp_.data(); }
  const cplx* data() const { return amp_.data(); }
  std::vector<cplx>& amplitudes() { return amp_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  void reset();  // back to |0...0>

  void apply_ry(int wire, double angle);
  void apply_rz(int wire, double angle);
  void apply_cnot(int control, int target);
  void apply_x(int wire);
  void apply_y(int wire);
  void apply_z(int wire);
  // Arbitrary single-qubit gate [[a, b], [c, d]].
  void apply_1q(int wire, cplx a, cplx b, cplx c, cplx d);

  double expectation_z(int wire) const;
  double norm() const;
  // <this|other>
  cplx inner(const StateVector& other) const;

 private:
  std::size_t stride(int wire) const { return std::size_t{1} << (q_ - 1 - wire); }

  int q_;
  std::vector<cplx> amp_;
};

}  // namespace fcvqc::qsim
