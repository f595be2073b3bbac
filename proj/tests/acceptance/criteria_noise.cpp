#include <chrono>
#include <cstdio>
#include <vector>

#include "criteria.hpp"
#include "fcvqc/theory/noise_bound.hpp"

namespace acceptance {

// 3. Layer-wise noise bound: empirical E||H_noisy - H_ideal||_2 stays below
// the analytic sum of per-layer bias and shot terms across the full
// p x S x L grid on a 3x3-block network.
bool criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  fcvqc::theory::NoiseBoundConfig cfg;  // q=3, B=3, K=3, 200 trials

  int holds = 0, total = 0;
  double worst_margin = 1e100;
  double worst_lhs = 0.0, worst_rhs = 0.0;
  for (const double p : {0.0, 0.01, 0.05}) {
    for (const std::uint64_t shots : {25ULL, 100ULL, 0ULL}) {  // 0 = infinite
      for (const int layers : {1, 2, 3}) {
        const auto point = fcvqc::theory::verify_noise_bound_point(cfg, p, shots, layers);
        ++total;
        if (point.holds()) ++holds;
        const double margin = point.rhs - point.lhs_mean;
        if (margin < worst_margin) {
          worst_margin = margin;
          worst_lhs = point.lhs_mean;
          worst_rhs = point.rhs;
        }
      }
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = holds == total && elapsed < 900.0;
  std::printf("[%s] criterion 3: noise bound grid (%d/%d points hold, tightest "
              "%.4f <= %.4f, %.0fs < 900s)\n",
              ok ? "PASS" : "FAIL", holds, total, worst_lhs, worst_rhs, elapsed);
  return ok;
}

}  // namespace acceptance
