#pragma once

#include <cstdint>

#include "fcvqc/data/tabular.hpp"

namespace fcvqc::data {

// Deterministic synthetic benchmark generators. Both reproduce the schema
// (column names, sizes, value ranges, class marginals) of well-known UCI
// tabular benchmarks so the training pipelines run out of the box in an
// offline environment; real CSV files with the same columns drop in via the
// data.csv config key.

// Concrete-strength style regression: 1030 rows, 8 mix-design features, a
// water/binder-driven strength law with age saturation and ~10%
// multiplicative noise.
TabularData make_concrete_like(std::uint64_t seed);

// Red-wine style 6-class quality classification: 1599 rows, 11 physico-
// chemical features, quality scores 3..8 with the familiar imbalanced
// marginals (most mass on 5 and 6).
TabularData make_wine_like(std::uint64_t seed);

}  // namespace fcvqc::data
