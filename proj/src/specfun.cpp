#include "kgspec/specfun.hpp"

#include "kgspec/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace kgspec::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// sin(pi x) with the argument reduced exactly so that values near integers
// keep their relative accuracy.
double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r > 1.0) return -std::sin(std::numbers::pi * (r - 1.0));
  return std::sin(std::numbers::pi * r);
}

double lanczos(double x) {
  // Gamma(x) for x >= 0.5
  const double xm = x - 1.0;
  double sum = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    sum += kLanczosCoefficients[i] / (xm + static_cast<double>(i));
  }
  const double t = xm + kLanczosG + 0.5;
  // split the power to stay finite for large arguments
  const double half = std::pow(t, 0.5 * (xm + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * half * std::exp(-t) * sum;
}

// Neumaier variant of Kahan summation.
template <class T = double>
class CompensatedSum {
public:
  void add(T v) {
    const T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

private:
  T sum_ = 0;
  T comp_ = 0;
};

double jacobi_explicit(int n, double a, double b, double x) {
  // sum_k binom(n+a, n-k) binom(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k)
  const double xm = 0.5 * (x - 1.0);
  const double xp = 0.5 * (x + 1.0);
  CompensatedSum acc;
  for (int k = 0; k <= n; ++k) {
    acc.add(binomial(n + a, n - k) * binomial(n + b, k) * std::pow(xm, k) * std::pow(xp, n - k));
  }
  return acc.value();
}

} // namespace

double gamma_real(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::domain, "gamma_real: non-finite argument");
  }
  if (x <= 0.0 && std::abs(x - std::round(x)) < 1e-14) {
    throw Error(ErrorCode::pole, "gamma_real: pole at non-positive integer " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * lanczos(1.0 - x));
  }
  return lanczos(x);
}

double binomial(double top, int k) {
  if (k < 0) return 0.0;
  double result = 1.0;
  for (int j = 1; j <= k; ++j) {
    result *= (top - k + j) / static_cast<double>(j);
  }
  return result;
}

double jacobi_poly(const JacobiParams& p, double x) {
  if (p.degree < 0) {
    throw Error(ErrorCode::invalid_argument, "jacobi_poly: negative degree");
  }
  if (p.degree == 0) return 1.0;
  // The recurrence divides by k + alpha + beta; near a zero of it the
  // rounding of earlier terms is amplified, so carry extended precision.
  using LD = long double;
  const LD a = p.alpha;
  const LD b = p.beta;
  const LD xl = x;
  const LD p1 = 0.5L * (a - b) + 0.5L * (a + b + 2.0L) * xl;
  if (p.degree == 1) return static_cast<double>(p1);

  LD prev = 1.0L;
  LD curr = p1;
  for (int k = 2; k <= p.degree; ++k) {
    const LD s = 2.0L * k + a + b;
    const LD denom = 2.0L * k * (k + a + b) * (s - 2.0L);
    if (std::abs(denom) < 1e-12L * (1.0L + s * s * k)) {
      return jacobi_explicit(p.degree, p.alpha, p.beta, x);
    }
    const LD c1 = (s - 1.0L) * (s * (s - 2.0L) * xl + a * a - b * b);
    const LD c2 = 2.0L * (k + a - 1.0L) * (k + b - 1.0L) * s;
    const LD next = (c1 * curr - c2 * prev) / denom;
    prev = curr;
    curr = next;
  }
  return static_cast<double>(curr);
}

double hyp2f1_terminating(int n, double b, double c, double x) {
  if (n < 0) {
    throw Error(ErrorCode::invalid_argument, "hyp2f1_terminating: n must be non-negative");
  }
  for (int j = 0; j < n; ++j) {
    if (std::abs(c + j) < 1e-14) {
      throw Error(ErrorCode::parameter,
                  "hyp2f1_terminating: (c)_k vanishes at c = " + std::to_string(c));
    }
  }
  // Near x = 1 the terms alternate and grow far beyond the sum; extended
  // precision keeps the rounding of each term below the cancellation.
  CompensatedSum<long double> acc;
  long double term = 1.0L;
  acc.add(term);
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<long double>(k - n) * (static_cast<long double>(b) + k)) /
            ((static_cast<long double>(c) + k) * (k + 1.0L)) * static_cast<long double>(x);
    acc.add(term);
  }
  return static_cast<double>(acc.value());
}

} // namespace kgspec::specfun
