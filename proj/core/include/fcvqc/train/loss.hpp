#pragma once

#include <span>
#include <string>
#include <vector>

namespace fcvqc::train {

enum class LossKind { kMSE, kCrossEntropy };

const char* to_string(LossKind kind);
LossKind loss_from_string(const std::string& name);

// Per-sample squared error averaged over output coordinates; grad (optional)
// receives d(loss)/d(pred).
double mse_loss(std::span<const double> pred, std::span<const double> target,
                std::vector<double>* grad = nullptr);

// Softmax cross-entropy on raw expectation logits; target is a class index.
double cross_entropy_loss(std::span<const double> logits, int target_class,
                          std::vector<double>* grad = nullptr);

}  // namespace fcvqc::train
