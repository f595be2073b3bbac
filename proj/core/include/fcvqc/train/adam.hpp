#pragma once

#include <span>
#include <vector>

namespace fcvqc::train {

struct AdamConfig {
  double learning_rate = 0.005;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam with the standard bias correction. One state per parameter vector.
class Adam {
 public:
  Adam(std::size_t dim, const AdamConfig& cfg);

  void step(std::span<double> params, std::span<const double> grad);
  int steps_taken() const { return t_; }

 private:
  AdamConfig cfg_;
  int t_ = 0;
  std::vector<double> m_;
  std::vector<double> v_;
};

}  // namespace fcvqc::train
