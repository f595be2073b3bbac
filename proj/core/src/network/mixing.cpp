#include "fcvqc/network/mixing.hpp"

#include <stdexcept>

namespace fcvqc::network {

std::vector<std::size_t> mixing_permutation(MixingRule rule, int blocks, int q) {
  if (blocks < 1 || q < 1) throw std::invalid_argument("mixing: need blocks >= 1, q >= 1");
  const std::size_t n = static_cast<std::size_t>(blocks) * q;
  std::vector<std::size_t> perm(n);
  switch (rule) {
    case MixingRule::kParallel:
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      break;
    case MixingRule::kFullyConnected:
      if (blocks != q)
        throw std::invalid_argument("fully_connected mixing requires B == q");
      for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < q; ++i) perm[static_cast<std::size_t>(b) * q + i] =
            static_cast<std::size_t>(i) * q + b;
      break;
    case MixingRule::kSlidingWindow: {
      if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("sliding_window mixing requires odd q >= 3");
      const int r = (q - 1) / 2;
      for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < q; ++i) {
          const int src = ((b - r + i) % blocks + blocks) % blocks;
          perm[static_cast<std::size_t>(b) * q + i] = static_cast<std::size_t>(src) * q + i;
        }
      break;
    }
  }
  return perm;
}

void mix_forward(MixingRule rule, std::span<const double> in, std::span<double> out,
                 int blocks, int q) {
  const auto perm = mixing_permutation(rule, blocks, q);
  if (in.size() != perm.size() || out.size() != perm.size())
    throw std::invalid_argument("mix_forward: vector length != blocks * q");
  for (std::size_t dst = 0; dst < perm.size(); ++dst) out[dst] = in[perm[dst]];
}

void mix_backward(MixingRule rule, std::span<const double> upstream, std::span<double> out,
                  int blocks, int q) {
  const auto perm = mixing_permutation(rule, blocks, q);
  if (upstream.size() != perm.size() || out.size() != perm.size())
    throw std::invalid_argument("mix_backward: vector length != blocks * q");
  for (std::size_t dst = 0; dst < perm.size(); ++dst) out[perm[dst]] = upstream[dst];
}

}  // namespace fcvqc::network
