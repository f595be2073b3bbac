#include "fcvqc/train/metrics.hpp"

#include <stdexcept>

namespace fcvqc::train {

double r2_score(std::span<const double> y_true, std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size() || y_true.empty())
    throw std::invalid_argument("r2_score: size mismatch");
  double mean = 0.0;
  for (double y : y_true) mean += y;
  mean /= static_cast<double>(y_true.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    ss_res += (y_true[i] - y_pred[i]) * (y_true[i] - y_pred[i]);
    ss_tot += (y_true[i] - mean) * (y_true[i] - mean);
  }
  if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : 0.0;
  return 1.0 - ss_res / ss_tot;
}

double accuracy(std::span<const int> labels, std::span<const int> predicted) {
  if (labels.size() != predicted.size() || labels.empty())
    throw std::invalid_argument("accuracy: size mismatch");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == predicted[i]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

int argmax(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("argmax: empty vector");
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

void GradientVariance::add(std::span<const double> grad) {
  for (double g : grad) {
    count_ += 1.0;
    sum_ += g;
    sum_sq_ += g * g;
  }
}

double GradientVariance::value() const {
  if (count_ == 0.0) return 0.0;
  const double mean = sum_ / count_;
  const double var = sum_sq_ / count_ - mean * mean;
  return var > 0.0 ? var : 0.0;
}

void GradientVariance::reset() {
  count_ = 0.0;
  sum_ = 0.0;
  sum_sq_ = 0.0;
}

}  // namespace fcvqc::train
