#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <vector>

#include "fcvqc/data/synthetic.hpp"
#include "fcvqc/data/tabular.hpp"

using namespace fcvqc::data;
using Catch::Matchers::WithinAbs;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const char* name)
      : path((std::filesystem::temp_directory_path() / name).string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("split_indices partitions with llround fractions") {
  const SplitIndices idx = split_indices(1030, 0.70, 0.15, 42);
  REQUIRE(idx.train.size() == 721);
  // 0.15 * 1030.0 rounds to exactly 154.5 in double; llround takes it up.
  REQUIRE(idx.val.size() == 155);
  REQUIRE(idx.test.size() == 154);

  std::set<std::size_t> all;
  for (auto* part : {&idx.train, &idx.val, &idx.test})
    for (std::size_t i : *part) {
      REQUIRE(i < 1030);
      REQUIRE(all.insert(i).second);  // disjoint
    }
  REQUIRE(all.size() == 1030);  // covering

  // Deterministic in the seed; a different seed permutes differently.
  REQUIRE(split_indices(1030, 0.70, 0.15, 42).train == idx.train);
  REQUIRE(split_indices(1030, 0.70, 0.15, 43).train != idx.train);

  REQUIRE_THROWS_AS(split_indices(0, 0.7, 0.15, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(split_indices(100, 0.0, 0.15, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(split_indices(100, 0.9, 0.1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(split_indices(3, 0.5, 0.4, 1), std::invalid_argument);
}

TEST_CASE("standardizer uses population moments of the fit split") {
  TabularData data;
  data.d = 2;
  data.n = 3;
  data.feature_names = {"a", "b"};
  data.target_name = "y";
  data.X = {1.0, 2.0, 3.0, 4.0, 5.0, 12.0};
  data.y = {0.0, 0.0, 0.0};

  const std::vector<std::size_t> idx = {0, 1, 2};
  const Standardizer s = Standardizer::fit(data, idx);
  REQUIRE_THAT(s.mean[0], WithinAbs(3.0, 1e-15));
  REQUIRE_THAT(s.mean[1], WithinAbs(6.0, 1e-15));
  REQUIRE_THAT(s.stddev[0], WithinAbs(std::sqrt(8.0 / 3.0), 1e-15));
  REQUIRE_THAT(s.stddev[1], WithinAbs(std::sqrt(56.0 / 3.0), 1e-15));

  std::vector<double> out(2);
  s.transform(std::vector<double>{5.0, 6.0}, out);
  REQUIRE_THAT(out[0], WithinAbs(2.0 / std::sqrt(8.0 / 3.0), 1e-15));
  REQUIRE_THAT(out[1], WithinAbs(0.0, 1e-15));

  REQUIRE_THROWS_AS(s.transform(std::vector<double>{1.0}, out), std::invalid_argument);
  REQUIRE_THROWS_AS(Standardizer::fit(data, std::vector<std::size_t>{}),
                    std::invalid_argument);

  // A constant column passes through unscaled instead of dividing by zero.
  TabularData flat = data;
  flat.X = {2.0, 7.0, 2.0, 8.0, 2.0, 9.0};
  const Standardizer fs = Standardizer::fit(flat, idx);
  REQUIRE(fs.stddev[0] == 1.0);
  fs.transform(std::vector<double>{2.0, 8.0}, out);
  REQUIRE_THAT(out[0], WithinAbs(0.0, 1e-15));
}

TEST_CASE("target scaler maps the train range onto [-0.9, 0.9]") {
  const std::vector<double> train_y = {2.0, 6.0, 3.5};
  const TargetScaler t = TargetScaler::fit(train_y);
  REQUIRE_THAT(t.scale(2.0), WithinAbs(-0.9, 1e-15));
  REQUIRE_THAT(t.scale(6.0), WithinAbs(0.9, 1e-15));
  REQUIRE_THAT(t.scale(4.0), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(t.unscale(t.scale(3.3)), WithinAbs(3.3, 1e-12));
  // Out-of-range values extrapolate linearly (the test split may exceed the
  // train range).
  REQUIRE(t.scale(8.0) > 0.9);

  const TargetScaler d = TargetScaler::fit(std::vector<double>{5.0, 5.0});
  REQUIRE_THAT(d.scale(5.0), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(d.unscale(0.3), WithinAbs(5.0, 1e-15));

  REQUIRE_THROWS_AS(TargetScaler::fit(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("make_samples assembles standardized features and scaled targets") {
  TabularData data;
  data.d = 2;
  data.n = 4;
  data.feature_names = {"a", "b"};
  data.target_name = "y";
  data.X = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0};
  data.y = {10.0, 20.0, 30.0, 40.0};

  const std::vector<std::size_t> train_idx = {0, 2};
  const Standardizer s = Standardizer::fit(data, train_idx);
  const TargetScaler t = TargetScaler::fit(std::vector<double>{10.0, 30.0});

  const auto set = make_samples(data, s, std::vector<std::size_t>{0, 2, 3}, &t);
  REQUIRE(set.n == 3);
  REQUIRE(set.x_dim == 2);
  REQUIRE(set.y_dim == 1);
  REQUIRE(set.labels.empty());
  // Row 0: (0-2)/2 = -1; row 3: (6-2)/2 = 2.
  REQUIRE_THAT(set.x[0], WithinAbs(-1.0, 1e-15));
  REQUIRE_THAT(set.x[4], WithinAbs(2.0, 1e-15));
  REQUIRE_THAT(set.y[0], WithinAbs(-0.9, 1e-15));
  REQUIRE_THAT(set.y[1], WithinAbs(0.9, 1e-15));
  REQUIRE_THAT(set.y[2], WithinAbs(1.8, 1e-12));  // extrapolated

  REQUIRE_THROWS_AS(make_samples(data, s, train_idx, nullptr), std::invalid_argument);

  TabularData cls = data;
  cls.classification = true;
  cls.labels = {0, 1, 1, 0};
  const auto cset = make_samples(cls, s, std::vector<std::size_t>{1, 2}, nullptr);
  REQUIRE(cset.y_dim == 0);
  REQUIRE(cset.labels == std::vector<int>{1, 1});
}

TEST_CASE("csv round-trip is value-exact and classification remaps labels") {
  TabularData data;
  data.d = 2;
  data.n = 3;
  data.feature_names = {"f1", "f2"};
  data.target_name = "grade";
  data.X = {0.1, -1.5000000000000002, 3.3, 2.25, -0.7, 1e-9};
  data.y = {7.0, 3.0, 5.0};

  TempFile f("fcvqc_tab_roundtrip.csv");
  write_csv(data, f.path);
  const TabularData back = load_csv(f.path, "grade", /*classification=*/true);
  REQUIRE(back.n == 3);
  REQUIRE(back.d == 2);
  REQUIRE(back.feature_names == data.feature_names);
  REQUIRE(back.X == data.X);  // bit-exact through the text format
  REQUIRE(back.y == data.y);
  // Distinct raw targets {3,5,7} in sorted order become classes 0..2.
  REQUIRE(back.class_values == std::vector<double>{3.0, 5.0, 7.0});
  REQUIRE(back.labels == std::vector<int>{2, 0, 1});

  const TabularData reg = load_csv(f.path, "grade", /*classification=*/false);
  REQUIRE(reg.labels.empty());
  REQUIRE(reg.y == data.y);
}

TEST_CASE("load_csv rejects malformed input") {
  REQUIRE_THROWS_AS(load_csv("/nonexistent/data.csv", "y", false), std::runtime_error);

  TempFile f("fcvqc_tab_bad.csv");
  {
    std::ofstream(f.path) << "a,b,y\n";
    REQUIRE_THROWS_AS(load_csv(f.path, "y", false), std::runtime_error);  // no rows
  }
  {
    std::ofstream(f.path) << "a,b,y\n1,2,3\n";
    REQUIRE_THROWS_AS(load_csv(f.path, "z", false), std::runtime_error);  // no column
  }
  {
    std::ofstream(f.path) << "a,b,y\n1,2\n";
    REQUIRE_THROWS_AS(load_csv(f.path, "y", false), std::runtime_error);  // short row
  }
  {
    std::ofstream(f.path) << "a,b,y\n1,fish,3\n";
    REQUIRE_THROWS_AS(load_csv(f.path, "y", false), std::runtime_error);  // non-numeric
  }
  {
    std::ofstream(f.path) << "y\n1\n";
    REQUIRE_THROWS_AS(load_csv(f.path, "y", false), std::runtime_error);  // no features
  }
  {  // blank lines are skipped, not errors
    std::ofstream(f.path) << "a,y\n1,2\n\n3,4\n";
    const TabularData ok = load_csv(f.path, "y", false);
    REQUIRE(ok.n == 2);
    REQUIRE(ok.X == std::vector<double>{1.0, 3.0});
  }
}

TEST_CASE("concrete-like generator schema and determinism") {
  const TabularData a = make_concrete_like(0);
  REQUIRE(a.n == 1030);
  REQUIRE(a.d == 8);
  REQUIRE_FALSE(a.classification);
  REQUIRE(a.feature_names ==
          std::vector<std::string>{"Cement", "BlastFurnaceSlag", "FlyAsh", "Water",
                                   "Superplasticizer", "CoarseAggregate", "FineAggregate",
                                   "Age"});
  REQUIRE(a.target_name == "ConcreteCompressiveStrength");
  REQUIRE(a.X.size() == 1030 * 8);
  REQUIRE(a.y.size() == 1030);
  for (double v : a.y) {
    REQUIRE(v >= 1.5);
    REQUIRE(v <= 95.0);
  }
  // Age column takes the standard curing durations only.
  const std::set<double> ages_seen = [&] {
    std::set<double> s;
    for (std::size_t i = 0; i < a.n; ++i) s.insert(a.X[i * 8 + 7]);
    return s;
  }();
  for (double v : ages_seen)
    REQUIRE(std::set<double>{1, 3, 7, 14, 28, 56, 90, 180, 365}.count(v) == 1);

  REQUIRE(make_concrete_like(0).X == a.X);
  REQUIRE(make_concrete_like(1).X != a.X);
}

TEST_CASE("wine-like generator reproduces the imbalanced class marginals") {
  const TabularData w = make_wine_like(0);
  REQUIRE(w.n == 1599);
  REQUIRE(w.d == 11);
  REQUIRE(w.classification);
  REQUIRE(w.feature_names.size() == 11);
  REQUIRE(w.feature_names[10] == "alcohol");
  REQUIRE(w.target_name == "quality");
  REQUIRE(w.class_values == std::vector<double>{3, 4, 5, 6, 7, 8});

  std::vector<std::size_t> counts(6, 0);
  for (int lab : w.labels) {
    REQUIRE(lab >= 0);
    REQUIRE(lab < 6);
    ++counts[static_cast<std::size_t>(lab)];
  }
  REQUIRE(counts == std::vector<std::size_t>{10, 53, 681, 638, 199, 18});
  for (std::size_t i = 0; i < w.n; ++i)
    REQUIRE(w.labels[i] == static_cast<int>(w.y[i]) - 3);

  REQUIRE(make_wine_like(0).X == w.X);
  REQUIRE(make_wine_like(5).X != w.X);
}
