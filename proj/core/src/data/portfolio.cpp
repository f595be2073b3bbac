#include "fcvqc/data/portfolio.hpp"

#include "fcvqc/data/tabular.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "fcvqc/util/rng.hpp"
#include "fcvqc/util/text.hpp"

namespace fcvqc::data {

namespace {

void check_config(const ScenarioConfig& cfg) {
  if (cfg.assets < 1) throw std::invalid_argument("scenario: assets must be >= 1");
  if (cfg.steps < 1) throw std::invalid_argument("scenario: steps must be >= 1");
  if (cfg.paths < 2) throw std::invalid_argument("scenario: paths must be >= 2");
  if (cfg.s0 <= 0.0) throw std::invalid_argument("scenario: s0 must be > 0");
  if (cfg.horizon <= 0.0) throw std::invalid_argument("scenario: horizon must be > 0");
  if (cfg.strike_lo > cfg.strike_hi || cfg.strike_lo <= 0.0)
    throw std::invalid_argument("scenario: bad strike range");
  if (cfg.vol_lo > cfg.vol_hi || cfg.vol_lo < 0.0)
    throw std::invalid_argument("scenario: bad volatility range");
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

void write_array(std::ofstream& out, const char* name, std::span<const double> v) {
  out << name;
  for (double x : v) out << ' ' << format_double(x);
  out << "\n";
}

std::vector<double> read_array(std::ifstream& in, const std::string& name,
                               std::size_t expect, const std::string& path) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("scenario '" + path + "': missing array '" + name + "'");
  const std::vector<std::string> fields = split(trim(line), ' ');
  if (fields.empty() || fields[0] != name)
    throw std::runtime_error("scenario '" + path + "': expected array '" + name + "'");
  if (fields.size() - 1 != expect)
    throw std::runtime_error("scenario '" + path + "': array '" + name + "' has " +
                             std::to_string(fields.size() - 1) + " values, expected " +
                             std::to_string(expect));
  std::vector<double> out;
  out.reserve(expect);
  for (std::size_t i = 1; i < fields.size(); ++i)
    out.push_back(parse_double(fields[i], "scenario array " + name));
  return out;
}

}  // namespace

Scenario make_scenario(const ScenarioConfig& cfg) {
  check_config(cfg);
  Scenario sc;
  sc.cfg = cfg;

  std::mt19937_64 setup_rng = make_rng(cfg.seed, 0);
  sc.strikes.resize(cfg.assets);
  sc.vols.resize(cfg.assets);
  for (int j = 0; j < cfg.assets; ++j)
    sc.strikes[j] = uniform_range(setup_rng, cfg.strike_lo, cfg.strike_hi);
  for (int j = 0; j < cfg.assets; ++j)
    sc.vols[j] = uniform_range(setup_rng, cfg.vol_lo, cfg.vol_hi);

  const std::size_t n = static_cast<std::size_t>(cfg.paths);
  const std::size_t per_path = static_cast<std::size_t>(cfg.steps + 1) * cfg.assets;
  sc.paths.resize(n * per_path);
  sc.labels.resize(n * per_path);
  sc.bs.resize(n * per_path);

  const double dt = cfg.horizon / cfg.steps;
  for (std::size_t i = 0; i < n; ++i) {
    // One decorrelated stream per path: path i is identical no matter how
    // many paths surround it.
    std::mt19937_64 rng = make_rng(cfg.seed, 1 + i);
    Gaussian gauss;
    for (int j = 0; j < cfg.assets; ++j) sc.paths[sc.index(i, 0, j)] = cfg.s0;
    for (int k = 1; k <= cfg.steps; ++k) {
      for (int j = 0; j < cfg.assets; ++j) {
        const double sigma = sc.vols[j];
        const double growth =
            (cfg.rate - 0.5 * sigma * sigma) * dt + sigma * std::sqrt(dt) * gauss(rng);
        sc.paths[sc.index(i, k, j)] = sc.paths[sc.index(i, k - 1, j)] * std::exp(growth);
      }
    }
    for (int k = 0; k <= cfg.steps; ++k) {
      const double tau = cfg.horizon - k * dt;
      const double discount = std::exp(-cfg.rate * tau);
      for (int j = 0; j < cfg.assets; ++j) {
        const double terminal = sc.paths[sc.index(i, cfg.steps, j)];
        sc.labels[sc.index(i, k, j)] =
            discount * std::max(terminal - sc.strikes[j], 0.0);
        sc.bs[sc.index(i, k, j)] = black_scholes_call(sc.paths[sc.index(i, k, j)],
                                                      sc.strikes[j], cfg.rate,
                                                      sc.vols[j], tau);
      }
    }
  }
  return sc;
}

double black_scholes_call(double s, double strike, double rate, double vol, double tau) {
  if (s <= 0.0 || strike <= 0.0) throw std::invalid_argument("black_scholes_call: s, strike must be > 0");
  if (tau < 0.0) throw std::invalid_argument("black_scholes_call: tau must be >= 0");
  if (tau == 0.0) return std::max(s - strike, 0.0);
  if (vol <= 0.0) return std::max(s - strike * std::exp(-rate * tau), 0.0);
  const double sig_sqrt = vol * std::sqrt(tau);
  const double d1 = (std::log(s / strike) + (rate + 0.5 * vol * vol) * tau) / sig_sqrt;
  const double d2 = d1 - sig_sqrt;
  return s * norm_cdf(d1) - strike * std::exp(-rate * tau) * norm_cdf(d2);
}

void save_scenario(const std::string& path, const Scenario& sc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "fcvqc-scenario v1\n";
  out << "assets " << sc.cfg.assets << "\n";
  out << "steps " << sc.cfg.steps << "\n";
  out << "paths " << sc.cfg.paths << "\n";
  out << "s0 " << format_double(sc.cfg.s0) << "\n";
  out << "rate " << format_double(sc.cfg.rate) << "\n";
  out << "horizon " << format_double(sc.cfg.horizon) << "\n";
  out << "strike_lo " << format_double(sc.cfg.strike_lo) << "\n";
  out << "strike_hi " << format_double(sc.cfg.strike_hi) << "\n";
  out << "vol_lo " << format_double(sc.cfg.vol_lo) << "\n";
  out << "vol_hi " << format_double(sc.cfg.vol_hi) << "\n";
  out << "seed " << sc.cfg.seed << "\n";
  write_array(out, "strikes", sc.strikes);
  write_array(out, "vols", sc.vols);
  write_array(out, "prices", sc.paths);
  write_array(out, "labels", sc.labels);
  write_array(out, "bs", sc.bs);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || trim(line) != "fcvqc-scenario v1")
    throw std::runtime_error("scenario '" + path + "': bad magic line");

  Scenario sc;
  const auto field = [&](const char* key) -> std::string {
    if (!std::getline(in, line))
      throw std::runtime_error("scenario '" + path + "': missing field '" + key + "'");
    const auto sp = line.find(' ');
    if (sp == std::string::npos || line.substr(0, sp) != key)
      throw std::runtime_error("scenario '" + path + "': expected field '" + std::string(key) +
                               "', got '" + line + "'");
    return trim(line.substr(sp + 1));
  };
  sc.cfg.assets = static_cast<int>(parse_long(field("assets"), "assets"));
  sc.cfg.steps = static_cast<int>(parse_long(field("steps"), "steps"));
  sc.cfg.paths = static_cast<int>(parse_long(field("paths"), "paths"));
  sc.cfg.s0 = parse_double(field("s0"), "s0");
  sc.cfg.rate = parse_double(field("rate"), "rate");
  sc.cfg.horizon = parse_double(field("horizon"), "horizon");
  sc.cfg.strike_lo = parse_double(field("strike_lo"), "strike_lo");
  sc.cfg.strike_hi = parse_double(field("strike_hi"), "strike_hi");
  sc.cfg.vol_lo = parse_double(field("vol_lo"), "vol_lo");
  sc.cfg.vol_hi = parse_double(field("vol_hi"), "vol_hi");
  sc.cfg.seed = static_cast<std::uint64_t>(parse_long(field("seed"), "seed"));
  check_config(sc.cfg);

  const std::size_t per_path = static_cast<std::size_t>(sc.cfg.steps + 1) * sc.cfg.assets;
  const std::size_t total = static_cast<std::size_t>(sc.cfg.paths) * per_path;
  sc.strikes = read_array(in, "strikes", sc.cfg.assets, path);
  sc.vols = read_array(in, "vols", sc.cfg.assets, path);
  sc.paths = read_array(in, "prices", total, path);
  sc.labels = read_array(in, "labels", total, path);
  sc.bs = read_array(in, "bs", total, path);
  return sc;
}

double portfolio_rel_mae(std::span<const double> pred, std::span<const double> ref,
                         std::size_t n_paths, int steps, int assets) {
  const std::size_t expect = n_paths * static_cast<std::size_t>(steps + 1) * assets;
  if (pred.size() != expect || ref.size() != expect)
    throw std::invalid_argument("portfolio_rel_mae: array size mismatch");
  if (n_paths == 0) throw std::invalid_argument("portfolio_rel_mae: no paths");

  double acc = 0.0;
  for (int k = 0; k <= steps; ++k) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n_paths; ++i) {
      const std::size_t base = (i * (steps + 1) + static_cast<std::size_t>(k)) * assets;
      double pred_pf = 0.0, ref_pf = 0.0;
      for (int j = 0; j < assets; ++j) {
        pred_pf += pred[base + j];
        ref_pf += ref[base + j];
      }
      num += std::abs(pred_pf - ref_pf);
      den += ref_pf;
    }
    if (den <= 0.0)
      throw std::invalid_argument("portfolio_rel_mae: reference portfolio value is zero");
    acc += num / den;
  }
  return acc / static_cast<double>(steps + 1);
}

double PortfolioDataset::unscale_label(int asset, double v) const {
  const double lo = label_lo[asset], hi = label_hi[asset];
  if (hi == lo) return lo;
  return lo + (v + 0.9) * (hi - lo) / 1.8;
}

PortfolioDataset build_portfolio_dataset(const Scenario& sc, double f_train,
                                         double f_val, std::uint64_t seed) {
  const SplitIndices idx =
      split_indices(static_cast<std::size_t>(sc.cfg.paths), f_train, f_val, seed);

  PortfolioDataset ds;
  ds.train_paths = idx.train;
  ds.val_paths = idx.val;
  ds.test_paths = idx.test;

  const int d = sc.cfg.assets;
  ds.label_lo.assign(d, 0.0);
  ds.label_hi.assign(d, 0.0);
  bool first = true;
  for (std::size_t i : idx.train) {
    for (int k = 0; k <= sc.cfg.steps; ++k) {
      for (int j = 0; j < d; ++j) {
        const double v = sc.labels[sc.index(i, k, j)];
        if (first) {
          ds.label_lo[j] = ds.label_hi[j] = v;
        } else {
          ds.label_lo[j] = std::min(ds.label_lo[j], v);
          ds.label_hi[j] = std::max(ds.label_hi[j], v);
        }
      }
      first = false;
    }
  }

  const auto fill = [&](std::span<const std::size_t> paths, train::SampleSet& set) {
    set.n = paths.size() * static_cast<std::size_t>(sc.cfg.steps + 1);
    set.x_dim = d;
    set.y_dim = d;
    set.x.reserve(set.n * d);
    set.y.reserve(set.n * d);
    for (std::size_t i : paths) {
      for (int k = 0; k <= sc.cfg.steps; ++k) {
        for (int j = 0; j < d; ++j)
          set.x.push_back(sc.paths[sc.index(i, k, j)] / sc.cfg.s0);
        for (int j = 0; j < d; ++j) {
          const double lo = ds.label_lo[j], hi = ds.label_hi[j];
          const double v = sc.labels[sc.index(i, k, j)];
          set.y.push_back(hi == lo ? 0.0 : -0.9 + (v - lo) * 1.8 / (hi - lo));
        }
      }
    }
  };
  fill(idx.train, ds.train);
  fill(idx.val, ds.val);
  fill(idx.test, ds.test);
  return ds;
}

RelMaeInputs assemble_rel_mae_inputs(const Scenario& sc, const PortfolioDataset& ds,
                                     std::span<const std::size_t> path_ids,
                                     std::span<const double> scaled_pred) {
  const int d = sc.cfg.assets;
  const std::size_t expect =
      path_ids.size() * static_cast<std::size_t>(sc.cfg.steps + 1) * d;
  if (scaled_pred.size() != expect)
    throw std::invalid_argument("assemble_rel_mae_inputs: prediction size mismatch");

  RelMaeInputs out;
  out.n_paths = path_ids.size();
  out.pred.reserve(expect);
  out.ref.reserve(expect);
  std::size_t flat = 0;
  for (std::size_t i : path_ids) {
    for (int k = 0; k <= sc.cfg.steps; ++k) {
      for (int j = 0; j < d; ++j) {
        out.pred.push_back(ds.unscale_label(j, scaled_pred[flat++]));
        out.ref.push_back(sc.bs[sc.index(i, k, j)]);
      }
    }
  }
  return out;
}

}  // namespace fcvqc::data
