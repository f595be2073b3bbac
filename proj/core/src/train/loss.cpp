#include "fcvqc/train/loss.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcvqc::train {

const char* to_string(LossKind kind) {
  return kind == LossKind::kMSE ? "mse" : "cross_entropy";
}

LossKind loss_from_string(const std::string& name) {
  if (name == "mse") return LossKind::kMSE;
  if (name == "cross_entropy") return LossKind::kCrossEntropy;
  throw std::invalid_argument("unknown loss '" + name + "' (mse | cross_entropy)");
}

double mse_loss(std::span<const double> pred, std::span<const double> target,
                std::vector<double>* grad) {
  if (pred.size() != target.size() || pred.empty())
    throw std::invalid_argument("mse_loss: prediction/target size mismatch");
  const double inv = 1.0 / static_cast<double>(pred.size());
  double loss = 0.0;
  if (grad) grad->resize(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double r = pred[i] - target[i];
    loss += r * r * inv;
    if (grad) (*grad)[i] = 2.0 * r * inv;
  }
  return loss;
}

double cross_entropy_loss(std::span<const double> logits, int target_class,
                          std::vector<double>* grad) {
  if (logits.empty()) throw std::invalid_argument("cross_entropy_loss: empty logits");
  if (target_class < 0 || target_class >= static_cast<int>(logits.size()))
    throw std::invalid_argument("cross_entropy_loss: class index out of range");
  double max_logit = logits[0];
  for (double z : logits) max_logit = std::max(max_logit, z);
  double denom = 0.0;
  for (double z : logits) denom += std::exp(z - max_logit);
  const double log_denom = std::log(denom) + max_logit;
  const double loss = log_denom - logits[target_class];
  if (grad) {
    grad->resize(logits.size());
    for (std::size_t i = 0; i < logits.size(); ++i) {
      const double p = std::exp(logits[i] - log_denom);
      (*grad)[i] = p - (static_cast<int>(i) == target_class ? 1.0 : 0.0);
    }
  }
  return loss;
}

}  // namespace fcvqc::train
