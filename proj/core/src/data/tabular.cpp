#include "fcvqc/data/tabular.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "fcvqc/util/rng.hpp"
#include "fcvqc/util/text.hpp"

namespace fcvqc::data {

TabularData load_csv(const std::string& path, const std::string& target_column,
                     bool classification) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("CSV '" + path + "' is empty");
  std::vector<std::string> header = split(trim(line), ',');
  for (std::string& h : header) h = trim(h);

  int target_idx = -1;
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == target_column) target_idx = static_cast<int>(i);
  if (target_idx < 0)
    throw std::runtime_error("CSV '" + path + "' has no column '" + target_column + "'");
  if (header.size() < 2)
    throw std::runtime_error("CSV '" + path + "' needs at least one feature column");

  TabularData data;
  data.classification = classification;
  data.target_name = target_column;
  for (std::size_t i = 0; i < header.size(); ++i)
    if (static_cast<int>(i) != target_idx) data.feature_names.push_back(header[i]);
  data.d = static_cast<int>(data.feature_names.size());

  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::vector<std::string> fields = split(t, ',');
    if (fields.size() != header.size())
      throw std::runtime_error("CSV '" + path + "' row " + std::to_string(row_no) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(header.size()));
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const double v = parse_double(fields[i], "'" + path + "' row " + std::to_string(row_no) +
                                                   " column '" + header[i] + "'");
      if (static_cast<int>(i) == target_idx)
        data.y.push_back(v);
      else
        data.X.push_back(v);
    }
    ++data.n;
  }
  if (data.n == 0) throw std::runtime_error("CSV '" + path + "' has no data rows");

  if (classification) {
    std::vector<double> distinct(data.y);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    data.class_values = distinct;
    data.labels.reserve(data.n);
    for (double v : data.y) {
      const auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
      data.labels.push_back(static_cast<int>(it - distinct.begin()));
    }
  }
  return data;
}

void write_csv(const TabularData& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  for (int j = 0; j < data.d; ++j) out << data.feature_names[j] << ',';
  out << data.target_name << "\n";
  for (std::size_t i = 0; i < data.n; ++i) {
    for (int j = 0; j < data.d; ++j)
      out << format_double(data.X[i * data.d + j]) << ',';
    out << format_double(data.y[i]) << "\n";
  }
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

SplitIndices split_indices(std::size_t n, double f_train, double f_val,
                           std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("split_indices: empty dataset");
  if (f_train <= 0.0 || f_val < 0.0 || f_train + f_val >= 1.0)
    throw std::invalid_argument("split_indices: fractions must satisfy 0 < train, 0 <= val, train + val < 1");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng = make_rng(seed, 0xDA7A);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_below(rng, i + 1)]);

  const std::size_t n_train = static_cast<std::size_t>(std::llround(f_train * static_cast<double>(n)));
  const std::size_t n_val = static_cast<std::size_t>(std::llround(f_val * static_cast<double>(n)));
  if (n_train == 0 || n_train + n_val >= n)
    throw std::invalid_argument("split_indices: degenerate split for n=" + std::to_string(n));

  SplitIndices idx;
  idx.train.assign(order.begin(), order.begin() + n_train);
  idx.val.assign(order.begin() + n_train, order.begin() + n_train + n_val);
  idx.test.assign(order.begin() + n_train + n_val, order.end());
  return idx;
}

Standardizer Standardizer::fit(const TabularData& data, std::span<const std::size_t> idx) {
  if (idx.empty()) throw std::invalid_argument("standardizer: empty fit split");
  Standardizer s;
  s.mean.assign(data.d, 0.0);
  s.stddev.assign(data.d, 0.0);
  for (std::size_t i : idx)
    for (int j = 0; j < data.d; ++j) s.mean[j] += data.X[i * data.d + j];
  for (int j = 0; j < data.d; ++j) s.mean[j] /= static_cast<double>(idx.size());
  for (std::size_t i : idx)
    for (int j = 0; j < data.d; ++j) {
      const double r = data.X[i * data.d + j] - s.mean[j];
      s.stddev[j] += r * r;
    }
  for (int j = 0; j < data.d; ++j) {
    s.stddev[j] = std::sqrt(s.stddev[j] / static_cast<double>(idx.size()));
    if (s.stddev[j] == 0.0) s.stddev[j] = 1.0;  // constant column: pass through
  }
  return s;
}

void Standardizer::transform(std::span<const double> row, std::span<double> out) const {
  if (row.size() != mean.size() || out.size() != mean.size())
    throw std::invalid_argument("standardizer: row width mismatch");
  for (std::size_t j = 0; j < mean.size(); ++j) out[j] = (row[j] - mean[j]) / stddev[j];
}

TargetScaler TargetScaler::fit(std::span<const double> values, double out_lo, double out_hi) {
  if (values.empty()) throw std::invalid_argument("target scaler: empty fit split");
  TargetScaler t;
  t.out_lo = out_lo;
  t.out_hi = out_hi;
  t.lo = t.hi = values[0];
  for (double v : values) {
    t.lo = std::min(t.lo, v);
    t.hi = std::max(t.hi, v);
  }
  return t;
}

double TargetScaler::scale(double v) const {
  if (hi == lo) return 0.5 * (out_lo + out_hi);
  return out_lo + (v - lo) * (out_hi - out_lo) / (hi - lo);
}

double TargetScaler::unscale(double v) const {
  if (hi == lo) return lo;
  return lo + (v - out_lo) * (hi - lo) / (out_hi - out_lo);
}

train::SampleSet make_samples(const TabularData& data, const Standardizer& stdz,
                              std::span<const std::size_t> idx,
                              const TargetScaler* scaler) {
  train::SampleSet set;
  set.n = idx.size();
  set.x_dim = data.d;
  set.x.resize(set.n * static_cast<std::size_t>(data.d));
  std::size_t row = 0;
  for (std::size_t i : idx) {
    stdz.transform(std::span<const double>(data.X.data() + i * data.d, data.d),
                   std::span<double>(set.x.data() + row * data.d, data.d));
    ++row;
  }
  if (data.classification) {
    set.y_dim = 0;
    set.labels.reserve(set.n);
    for (std::size_t i : idx) set.labels.push_back(data.labels[i]);
  } else {
    if (!scaler) throw std::invalid_argument("make_samples: regression needs a target scaler");
    set.y_dim = 1;
    set.y.reserve(set.n);
    for (std::size_t i : idx) set.y.push_back(scaler->scale(data.y[i]));
  }
  return set;
}

}  // namespace fcvqc::data
