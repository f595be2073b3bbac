#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcvqc/network/spec.hpp"
#include "fcvqc/train/adam.hpp"
#include "fcvqc/train/loss.hpp"

namespace fcvqc::train {

// In-memory supervised sample matrix. Regression targets are stored in y
// (already mapped to the model's [-1, 1] output scale); classification
// stores class indices in labels and leaves y empty.
struct SampleSet {
  std::size_t n = 0;
  int x_dim = 0;
  int y_dim = 0;
  std::vector<double> x;    // n * x_dim, row-major
  std::vector<double> y;    // n * y_dim
  std::vector<int> labels;  // n (classification only)

  std::span<const double> sample_x(std::size_t i) const {
    return {x.data() + i * static_cast<std::size_t>(x_dim), static_cast<std::size_t>(x_dim)};
  }
  std::span<const double> sample_y(std::size_t i) const {
    return {y.data() + i * static_cast<std::size_t>(y_dim), static_cast<std::size_t>(y_dim)};
  }
};

// Validation-column metric written to the history CSV.
enum class ValMetric { kMSE, kR2, kAccuracy };

struct TrainConfig {
  AdamConfig adam;
  int epochs = 100;
  int batch_size = 0;  // 0 (or >= n) = full batch, one step per epoch
  LossKind loss = LossKind::kMSE;
  ValMetric val_metric = ValMetric::kMSE;
  std::uint64_t seed = 42;
  int log_every = 0;  // progress to stderr every N epochs; 0 = silent
};

struct EpochRow {
  int epoch;  // 1-based
  double train_loss;
  double val_loss;
  double val_metric;
  double grad_variance;
};

struct FitResult {
  std::vector<double> best_params;  // lowest validation loss (earliest on ties)
  int best_epoch = 0;
  double best_val_loss = 0.0;
  std::vector<double> final_params;
  std::vector<EpochRow> history;
};

// Deterministic training loop: given the same spec, initial parameters,
// data, and config, every run reproduces the same trajectory bit-for-bit.
// Minibatch order is drawn from a per-epoch stream of cfg.seed; gradients
// accumulate in fixed sample order. With an empty validation set the
// validation columns mirror the training loss and best tracks train loss.
FitResult fit(const network::NetworkSpec& spec, std::vector<double> params,
              const SampleSet& train, const SampleSet& val, const TrainConfig& cfg);

// Forward pass over a whole sample set; returns n x out_width row-major.
std::vector<double> predict(const network::NetworkSpec& spec,
                            std::span<const double> params, const SampleSet& data);

// epoch,train_loss,val_metric,grad_variance
void write_history_csv(const std::string& path, const std::vector<EpochRow>& history);

}  // namespace fcvqc::train
