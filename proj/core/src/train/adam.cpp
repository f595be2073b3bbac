#include "fcvqc/train/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace fcvqc::train {

Adam::Adam(std::size_t dim, const AdamConfig& cfg)
    : cfg_(cfg), m_(dim, 0.0), v_(dim, 0.0) {
  if (cfg.learning_rate <= 0.0) throw std::invalid_argument("adam: learning rate must be > 0");
  if (cfg.beta1 < 0.0 || cfg.beta1 >= 1.0 || cfg.beta2 < 0.0 || cfg.beta2 >= 1.0)
    throw std::invalid_argument("adam: betas must lie in [0, 1)");
  if (cfg.epsilon <= 0.0) throw std::invalid_argument("adam: epsilon must be > 0");
}

void Adam::step(std::span<double> params, std::span<const double> grad) {
  if (params.size() != m_.size() || grad.size() != m_.size())
    throw std::invalid_argument("adam: dimension mismatch");
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, t_);
  const double bc2 = 1.0 - std::pow(cfg_.beta2, t_);
  for (std::size_t i = 0; i < m_.size(); ++i) {
    m_[i] = cfg_.beta1 * m_[i] + (1.0 - cfg_.beta1) * grad[i];
    v_[i] = cfg_.beta2 * v_[i] + (1.0 - cfg_.beta2) * grad[i] * grad[i];
    const double m_hat = m_[i] / bc1;
    const double v_hat = v_[i] / bc2;
    params[i] -= cfg_.learning_rate * m_hat / (std::sqrt(v_hat) + cfg_.epsilon);
  }
}

}  // namespace fcvqc::train
