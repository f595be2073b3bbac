#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcvqc/train/fit.hpp"

namespace fcvqc::data {

// A loaded tabular dataset. For classification, distinct raw target values
// are mapped in sorted order to class codes 0..C-1 (e.g. wine quality scores
// {3..8} become classes 0..5) and kept in class_values.
struct TabularData {
  std::vector<std::string> feature_names;
  std::string target_name;
  bool classification = false;
  std::size_t n = 0;
  int d = 0;
  std::vector<double> X;             // n * d, row-major
  std::vector<double> y;             // n raw target values
  std::vector<int> labels;           // n class codes (classification)
  std::vector<double> class_values;  // code -> raw value (classification)
};

// Comma-separated file with a header row; every non-target column must be
// numeric. Throws with row/column context on malformed input.
TabularData load_csv(const std::string& path, const std::string& target_column,
                     bool classification);

// Writes a dataset back out with full double precision (load_csv(write_csv(x))
// reproduces the values exactly).
void write_csv(const TabularData& data, const std::string& path);

struct SplitIndices {
  std::vector<std::size_t> train, val, test;
};

// Seeded random partition into round(f_train*n) / round(f_val*n) / rest.
SplitIndices split_indices(std::size_t n, double f_train, double f_val,
                           std::uint64_t seed);

// Per-feature z-score transform fitted on the training split only.
struct Standardizer {
  std::vector<double> mean, stddev;

  static Standardizer fit(const TabularData& data, std::span<const std::size_t> idx);
  void transform(std::span<const double> row, std::span<double> out) const;
};

// Affine map from the training-split target range onto [out_lo, out_hi]
// (defaults keep headroom inside the model's [-1, 1] output range).
struct TargetScaler {
  double lo = 0.0, hi = 1.0;
  double out_lo = -0.9, out_hi = 0.9;

  static TargetScaler fit(std::span<const double> values, double out_lo = -0.9,
                          double out_hi = 0.9);
  double scale(double v) const;
  double unscale(double v) const;
};

// Assemble model-ready sample sets: standardized features, regression targets
// mapped through the scaler (y_dim = 1), classification labels passed through.
train::SampleSet make_samples(const TabularData& data, const Standardizer& stdz,
                              std::span<const std::size_t> idx,
                              const TargetScaler* scaler);

}  // namespace fcvqc::data
