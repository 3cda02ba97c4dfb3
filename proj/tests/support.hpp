#pragma once

// Seeded value generators for the property tests. Each generator draws from
// the domain the property is stated on; failures print the seed and case.

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <limits>
#include <random>

namespace kgtest {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // Log-uniform magnitude with random sign, for couplings spanning decades.
  double signed_log(double lo, double hi) {
    const double mag = std::exp(uniform(std::log(lo), std::log(hi)));
    return coin() ? mag : -mag;
  }

private:
  std::mt19937_64 rng_;
};

inline double rel_diff(double a, double b) {
  const double den = std::max(std::abs(a), std::abs(b));
  return den == 0.0 ? 0.0 : std::abs(a - b) / den;
}

// Distance in units in the last place of `scale`, normally the largest term
// of the expression being checked (a sum that cancels has no meaningful
// relative ulp count of its own).
inline double ulps(double a, double b, double scale = 0.0) {
  scale = std::max({scale, std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
  return std::abs(a - b) / (scale * std::numeric_limits<double>::epsilon());
}

} // namespace kgtest
