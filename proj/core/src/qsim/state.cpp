#include "fcvqc/qsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace fcvqc::qsim {

StateVector::StateVector(int num_wires) : q_(num_wires) {
  if (num_wires < 1 || num_wires > 24)
    throw std::invalid_argument("statevector wire count out of range [1, 24]");
  amp_.assign(std::size_t{1} << q_, cplx{0.0, 0.0});
  amp_[0] = cplx{1.0, 0.0};
}

void StateVector::reset() {
  std::fill(amp_.begin(), amp_.end(), cplx{0.0, 0.0});
  amp_[0] = cplx{1.0, 0.0};
}

void StateVector::apply_ry(int wire, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const std::size_t st = stride(wire);
  const std::size_t n = amp_.size();
  for (std::size_t base = 0; base < n; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + st;
      const cplx a0 = amp_[i0];
      const cplx a1 = amp_[i1];
      amp_[i0] = c * a0 - s * a1;
      amp_[i1] = s * a0 + c * a1;
    }
  }
}

void StateVector::apply_rz(int wire, double angle) {
  const cplx p0{std::cos(0.5 * angle), -std::sin(0.5 * angle)};
  const cplx p1 = std::conj(p0);
  const std::size_t st = stride(wire);
  const std::size_t n = amp_.size();
  for (std::size_t base = 0; base < n; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t i0 = base + off;
      amp_[i0] *= p0;
      amp_[i0 + st] *= p1;
    }
  }
}

void StateVector::apply_cnot(int control, int target) {
  if (control == target) throw std::invalid_argument("cnot: control == target");
  const std::size_t cm = stride(control);
  const std::size_t tm = stride(target);
  const std::size_t n = amp_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cm) && !(i & tm)) std::swap(amp_[i], amp_[i | tm]);
  }
}

void StateVector::apply_x(int wire) {
  const std::size_t st = stride(wire);
  const std::size_t n = amp_.size();
  for (std::size_t base = 0; base < n; base += 2 * st)
    for (std::size_t off = 0; off < st; ++off)
      std::swap(amp_[base + off], amp_[base + off + st]);
}

void StateVector::apply_y(int wire) {
  const std::size_t st = stride(wire);
  const std::size_t n = amp_.size();
  const cplx im{0.0, 1.0};
  for (std::size_t base = 0; base < n; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + st;
      const cplx a0 = amp_[i0];
      amp_[i0] = -im * amp_[i1];
      amp_[i1] = im * a0;
    }
  }
}

void StateVector::apply_z(int wire) {
  const std::size_t st = stride(wire);
  const std::size_t n = amp_.size();
  for (std::size_t base = 0; base < n; base += 2 * st)
    for (std::size_t off = 0; off < st; ++off) amp_[base + off + st] = -amp_[base + off + st];
}

void StateVector::apply_1q(int wire, cplx a, cplx b, cplx c, cplx d) {
  const std::size_t st = stride(wire);
  const std::size_t n = amp_.size();
  for (std::size_t base = 0; base < n; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + st;
      const cplx a0 = amp_[i0];
      const cplx a1 = amp_[i1];
      amp_[i0] = a * a0 + b * a1;
      amp_[i1] = c * a0 + d * a1;
    }
  }
}

double StateVector::expectation_z(int wire) const {
  const std::size_t st = stride(wire);
  double e = 0.0;
  const std::size_t n = amp_.size();
  for (std::size_t base = 0; base < n; base += 2 * st) {
    for (std::size_t off = 0; off < st; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + st;
      e += std::norm(amp_[i0]) - std::norm(amp_[i1]);
    }
  }
  return e;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

cplx StateVector::inner(const StateVector& other) const {
  cplx s{0.0, 0.0};
  const std::size_t n = amp_.size();
  for (std::size_t i = 0; i < n; ++i) s += std::conj(amp_[i]) * other.amp_[i];
  return s;
}

}  // namespace fcvqc::qsim
