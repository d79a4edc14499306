#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace bim {

// All randomness flows through named streams derived from one master seed,
// so components can be re-run in any order (or in parallel) and still see
// identical draws. Derivation: FNV-1a over the stream name, mixed with the
// master seed through splitmix64.

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                          std::uint64_t index = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform double in [0,1). Built from the top 53 bits so the value does
  // not depend on the standard library's distribution implementation.
  double u01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  int below(int n) { return static_cast<int>(u01() * n); }

  // Uniform integer in [lo, hi].
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  double exponential(double rate) { return -std::log1p(-u01()) / rate; }

  // Index drawn from an explicit categorical distribution.
  int categorical(const std::vector<double>& probs) {
    double u = u01(), acc = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
  }

  // Fisher-Yates permutation of 0..n-1.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
    return p;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bim
