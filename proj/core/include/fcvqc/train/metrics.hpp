#pragma once

#include <span>
#include <vector>

namespace fcvqc::train {

// Coefficient of determination 1 - SS_res / SS_tot. Affine-invariant in the
// prediction scale, so it can be reported on raw or rescaled targets alike.
double r2_score(std::span<const double> y_true, std::span<const double> y_pred);

// Fraction of samples whose argmax logit equals the label.
double accuracy(std::span<const int> labels, std::span<const int> predicted);

int argmax(std::span<const double> v);

// Streaming population variance over every coordinate of every gradient
// vector pushed in — the per-epoch "gradient variance" diagnostic used for
// barren-plateau detection.
class GradientVariance {
 public:
  void add(std::span<const double> grad);
  double value() const;  // population variance; 0 if nothing was added
  void reset();

 private:
  double count_ = 0.0;
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
};

}  // namespace fcvqc::train
