#include "fcvqc/train/fit.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fcvqc/network/forward.hpp"
#include "fcvqc/train/metrics.hpp"
#include "fcvqc/util/rng.hpp"
#include "fcvqc/util/text.hpp"

namespace fcvqc::train {

namespace {

void check_data(const network::NetworkSpec& spec, const SampleSet& data,
                LossKind loss, const char* which) {
  if (data.n == 0) return;
  if (data.x_dim != spec.input_dim)
    throw std::invalid_argument(std::string(which) + " set feature width != network input dim");
  if (data.x.size() != data.n * static_cast<std::size_t>(data.x_dim))
    throw std::invalid_argument(std::string(which) + " set feature matrix has wrong size");
  const int out_w = spec.layers.back().out_width;
  if (loss == LossKind::kMSE) {
    if (data.y_dim != out_w)
      throw std::invalid_argument(std::string(which) + " set target width != network output dim");
    if (data.y.size() != data.n * static_cast<std::size_t>(data.y_dim))
      throw std::invalid_argument(std::string(which) + " set target matrix has wrong size");
  } else {
    if (data.labels.size() != data.n)
      throw std::invalid_argument(std::string(which) + " set label count != sample count");
    for (int lab : data.labels)
      if (lab < 0 || lab >= out_w)
        throw std::invalid_argument(std::string(which) + " set has a label outside [0, n_out)");
  }
}

double sample_loss(LossKind loss, std::span<const double> pred, const SampleSet& data,
                   std::size_t i, std::vector<double>* grad) {
  if (loss == LossKind::kMSE) return mse_loss(pred, data.sample_y(i), grad);
  return cross_entropy_loss(pred, data.labels[i], grad);
}

struct ValScore {
  double loss;
  double metric;
};

ValScore evaluate(const network::NetworkSpec& spec, std::span<const double> params,
                  const SampleSet& data, LossKind loss, ValMetric metric) {
  double loss_sum = 0.0;
  std::vector<double> flat_true, flat_pred;
  std::vector<int> pred_class;
  for (std::size_t i = 0; i < data.n; ++i) {
    const std::vector<double> out = network::net_forward(spec, params, data.sample_x(i));
    loss_sum += sample_loss(loss, out, data, i, nullptr);
    if (metric == ValMetric::kR2) {
      const auto yt = data.sample_y(i);
      flat_true.insert(flat_true.end(), yt.begin(), yt.end());
      flat_pred.insert(flat_pred.end(), out.begin(), out.end());
    } else if (metric == ValMetric::kAccuracy) {
      pred_class.push_back(argmax(out));
    }
  }
  ValScore score{};
  score.loss = loss_sum / static_cast<double>(data.n);
  switch (metric) {
    case ValMetric::kMSE: score.metric = score.loss; break;
    case ValMetric::kR2: score.metric = r2_score(flat_true, flat_pred); break;
    case ValMetric::kAccuracy: score.metric = accuracy(data.labels, pred_class); break;
  }
  return score;
}

}  // namespace

FitResult fit(const network::NetworkSpec& spec, std::vector<double> params,
              const SampleSet& train, const SampleSet& val, const TrainConfig& cfg) {
  if (params.size() != spec.param_count)
    throw std::invalid_argument("fit: parameter vector does not match the network");
  if (train.n == 0) throw std::invalid_argument("fit: empty training set");
  if (cfg.epochs < 1) throw std::invalid_argument("fit: epochs must be >= 1");
  if (cfg.batch_size < 0) throw std::invalid_argument("fit: batch size must be >= 0");
  check_data(spec, train, cfg.loss, "train");
  check_data(spec, val, cfg.loss, "validation");

  const std::size_t batch =
      cfg.batch_size == 0 ? train.n
                          : std::min<std::size_t>(cfg.batch_size, train.n);
  const bool shuffle = batch < train.n;

  Adam adam(params.size(), cfg.adam);
  FitResult result;
  result.best_val_loss = std::numeric_limits<double>::infinity();
  result.history.reserve(cfg.epochs);

  std::vector<std::size_t> order(train.n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> grad(params.size());
  std::vector<double> dpred;
  network::ForwardCache cache;
  GradientVariance gv;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    if (shuffle) {
      // Fisher-Yates from a per-epoch stream; shuffle order never depends on
      // how many draws earlier epochs consumed.
      std::mt19937_64 rng = make_rng(cfg.seed, static_cast<std::uint64_t>(epoch));
      for (std::size_t i = train.n - 1; i > 0; --i)
        std::swap(order[i], order[uniform_below(rng, i + 1)]);
    }

    gv.reset();
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < train.n; start += batch) {
      const std::size_t stop = std::min(train.n, start + batch);
      const double inv = 1.0 / static_cast<double>(stop - start);
      std::fill(grad.begin(), grad.end(), 0.0);
      for (std::size_t pos = start; pos < stop; ++pos) {
        const std::size_t i = order[pos];
        const std::vector<double> out =
            network::net_forward(spec, params, train.sample_x(i), &cache);
        loss_sum += sample_loss(cfg.loss, out, train, i, &dpred);
        const std::vector<double> g = network::net_backward(spec, params, cache, dpred);
        for (std::size_t m = 0; m < grad.size(); ++m) grad[m] += g[m] * inv;
      }
      adam.step(params, grad);
      gv.add(grad);
    }
    const double train_loss = loss_sum / static_cast<double>(train.n);

    ValScore score{};
    if (val.n > 0) {
      score = evaluate(spec, params, val, cfg.loss, cfg.val_metric);
    } else {
      score.loss = train_loss;
      score.metric = train_loss;
    }

    if (score.loss < result.best_val_loss) {
      result.best_val_loss = score.loss;
      result.best_epoch = epoch;
      result.best_params = params;
    }
    result.history.push_back({epoch, train_loss, score.loss, score.metric, gv.value()});

    if (cfg.log_every > 0 && (epoch % cfg.log_every == 0 || epoch == cfg.epochs))
      std::fprintf(stderr, "epoch %5d  train %.6f  val %.6f  metric %.6f  gvar %.3e\n",
                   epoch, train_loss, score.loss, score.metric, gv.value());
  }

  result.final_params = std::move(params);
  if (result.best_params.empty()) {
    result.best_params = result.final_params;
    result.best_epoch = cfg.epochs;
  }
  return result;
}

std::vector<double> predict(const network::NetworkSpec& spec,
                            std::span<const double> params, const SampleSet& data) {
  const int out_w = spec.layers.back().out_width;
  std::vector<double> out;
  out.reserve(data.n * static_cast<std::size_t>(out_w));
  for (std::size_t i = 0; i < data.n; ++i) {
    const std::vector<double> row = network::net_forward(spec, params, data.sample_x(i));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

void write_history_csv(const std::string& path, const std::vector<EpochRow>& history) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "epoch,train_loss,val_metric,grad_variance\n";
  for (const EpochRow& row : history)
    out << row.epoch << ',' << format_double(row.train_loss) << ','
        << format_double(row.val_metric) << ',' << format_double(row.grad_variance) << "\n";
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace fcvqc::train
