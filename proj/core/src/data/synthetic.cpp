#include "fcvqc/data/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcvqc/util/rng.hpp"

namespace fcvqc::data {

namespace {

double clamp(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

}  // namespace

TabularData make_concrete_like(std::uint64_t seed) {
  constexpr std::size_t kRows = 1030;
  TabularData data;
  data.feature_names = {"Cement",           "BlastFurnaceSlag", "FlyAsh",
                        "Water",            "Superplasticizer", "CoarseAggregate",
                        "FineAggregate",    "Age"};
  data.target_name = "ConcreteCompressiveStrength";
  data.d = 8;
  data.n = kRows;
  data.X.reserve(kRows * 8);
  data.y.reserve(kRows);

  std::mt19937_64 rng = make_rng(seed, 0xC0DC);
  Gaussian gauss;
  const int ages[] = {1, 3, 7, 14, 28, 56, 90, 180, 365};
  const int age_weights[] = {4, 8, 12, 10, 30, 12, 12, 7, 5};  // sums to 100

  for (std::size_t i = 0; i < kRows; ++i) {
    const double cement = uniform_range(rng, 120.0, 540.0);
    const double slag = uniform_double(rng) < 0.42 ? 0.0 : uniform_range(rng, 15.0, 360.0);
    const double flyash = uniform_double(rng) < 0.48 ? 0.0 : uniform_range(rng, 10.0, 200.0);
    const double water = uniform_range(rng, 125.0, 245.0);
    const double sp = uniform_double(rng) < 0.32 ? 0.0 : uniform_range(rng, 2.0, 30.0);
    const double coarse = uniform_range(rng, 800.0, 1145.0);
    const double fine = uniform_range(rng, 595.0, 990.0);
    int age = 28;
    {
      int pick = static_cast<int>(uniform_below(rng, 100));
      for (int a = 0; a < 9; ++a) {
        pick -= age_weights[a];
        if (pick < 0) {
          age = ages[a];
          break;
        }
      }
    }

    // Abrams-style water/binder law with age saturation and small
    // plasticizer/aggregate corrections; multiplicative lognormal noise.
    const double binder = cement + 0.85 * slag + 0.62 * flyash;
    const double wb = water / binder;
    const double base = 165.0 * std::exp(-2.5 * wb);
    const double age_f = std::sqrt(static_cast<double>(age)) /
                         (3.0 + std::sqrt(static_cast<double>(age)));
    const double sp_f = 1.0 + 0.035 * std::sqrt(sp);
    const double agg_f = 1.0 + 0.00008 * (coarse - 970.0) - 0.00006 * (fine - 790.0);
    const double raw = base * age_f * sp_f * agg_f;
    const double strength =
        clamp(88.0 * std::tanh(raw / 88.0) * std::exp(0.10 * gauss(rng)), 1.5, 95.0);

    const double row[8] = {cement, slag, flyash, water, sp, coarse, fine,
                           static_cast<double>(age)};
    data.X.insert(data.X.end(), row, row + 8);
    data.y.push_back(strength);
  }
  return data;
}

TabularData make_wine_like(std::uint64_t seed) {
  constexpr std::size_t kRows = 1599;
  TabularData data;
  data.classification = true;
  data.feature_names = {"fixed_acidity",       "volatile_acidity", "citric_acid",
                        "residual_sugar",      "chlorides",        "free_sulfur_dioxide",
                        "total_sulfur_dioxide","density",          "pH",
                        "sulphates",           "alcohol"};
  data.target_name = "quality";
  data.d = 11;
  data.n = kRows;
  data.X.reserve(kRows * 11);
  data.y.reserve(kRows);

  std::mt19937_64 rng = make_rng(seed, 0x3117E);
  Gaussian gauss;
  std::vector<double> scores;
  scores.reserve(kRows);

  for (std::size_t i = 0; i < kRows; ++i) {
    // Latent quality tendency drives the organoleptically relevant columns.
    const double g = gauss(rng);
    const double alcohol = clamp(10.42 + 0.75 * g + 0.55 * gauss(rng), 8.4, 14.9);
    const double volatile_a = clamp(0.53 - 0.11 * g + 0.13 * gauss(rng), 0.12, 1.58);
    const double sulphates = clamp(0.66 + 0.08 * g + 0.13 * gauss(rng), 0.33, 2.0);
    const double citric = clamp(0.27 + 0.06 * g + 0.14 * gauss(rng), 0.0, 1.0);
    const double fixed_a = clamp(8.32 + 1.6 * citric + 1.5 * gauss(rng), 4.6, 15.9);
    const double density = clamp(0.9967 - 0.0009 * (alcohol - 10.42) +
                                     0.0004 * (fixed_a - 8.32) + 0.0008 * gauss(rng),
                                 0.990, 1.004);
    const double ph = clamp(3.31 - 0.035 * (fixed_a - 8.32) + 0.12 * gauss(rng), 2.74, 4.01);
    const double sugar = clamp(1.8 + std::pow(std::abs(1.1 * gauss(rng)), 1.3), 0.9, 15.5);
    const double chlorides =
        clamp(0.074 + 0.02 * gauss(rng) + 0.03 * std::abs(gauss(rng)), 0.012, 0.611);
    const double free_so2 = std::round(clamp(15.9 + 8.0 * gauss(rng), 1.0, 72.0));
    const double total_so2 =
        std::round(clamp(2.2 * free_so2 + 12.0 + 14.0 * gauss(rng), 6.0, 289.0));

    const double z_alc = (alcohol - 10.42) / 1.07;
    const double z_vol = (volatile_a - 0.53) / 0.18;
    const double z_sul = (sulphates - 0.66) / 0.17;
    const double z_cit = (citric - 0.27) / 0.19;
    const double z_chl = (chlorides - 0.087) / 0.047;
    const double z_so2 = (total_so2 - 46.0) / 33.0;
    const double score = 1.05 * z_alc - 1.0 * z_vol + 0.55 * z_sul + 0.25 * z_cit -
                         0.35 * z_chl - 0.20 * z_so2 + 0.18 * z_alc * z_sul -
                         0.12 * z_vol * z_chl + 1.05 * gauss(rng);
    scores.push_back(score);

    const double row[11] = {fixed_a, volatile_a, citric,  sugar, chlorides, free_so2,
                            total_so2, density,  ph,      sulphates, alcohol};
    data.X.insert(data.X.end(), row, row + 11);
  }

  // Bin scores so the class marginals match the familiar imbalanced counts.
  const std::size_t counts[6] = {10, 53, 681, 638, 199, 18};
  std::vector<std::size_t> order(kRows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  data.y.assign(kRows, 0.0);
  std::size_t pos = 0;
  for (int cls = 0; cls < 6; ++cls)
    for (std::size_t c = 0; c < counts[cls]; ++c) data.y[order[pos++]] = 3.0 + cls;

  data.class_values = {3, 4, 5, 6, 7, 8};
  data.labels.reserve(kRows);
  for (double v : data.y) data.labels.push_back(static_cast<int>(v) - 3);
  return data;
}

}  // namespace fcvqc::data
