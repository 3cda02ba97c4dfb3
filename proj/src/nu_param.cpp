#include "kgspec/nu_param.hpp"

#include "kgspec/error.hpp"

#include <cmath>
#include <string>

namespace kgspec::nu {

NUDerived derive_parameters(const HypergeometricCoefficients& h, RootBranch c8_branch) {
  if (h.c3 == 0.0) {
    throw Error(ErrorCode::parameter, "derive_parameters: c3 must be non-zero");
  }
  NUDerived d;
  d.c3 = h.c3;
  d.c4 = 0.5 * (1.0 - h.c1);
  d.c5 = 0.5 * (h.c2 - 2.0 * h.c3);
  d.c6 = d.c5 * d.c5 + h.A;
  d.c7 = 2.0 * d.c4 * d.c5 - h.B;
  d.c8 = d.c4 * d.c4 + h.C;
  d.c9 = h.c3 * (d.c7 + h.c3 * d.c8) + d.c6;
  if (d.c8 < 0.0 || d.c9 < 0.0) {
    throw Error(ErrorCode::complex_branch, "derive_parameters: c8 = " + std::to_string(d.c8) +
                                               ", c9 = " + std::to_string(d.c9));
  }
  d.sqrt_c8 = std::sqrt(d.c8);
  if (c8_branch == RootBranch::negative) d.sqrt_c8 = -d.sqrt_c8;
  d.sqrt_c9 = std::sqrt(d.c9);

  d.k_minus = -(d.c7 + 2.0 * h.c3 * d.c8) - 2.0 * d.sqrt_c8 * d.sqrt_c9;
  d.c10 = h.c1 + 2.0 * d.c4 + 2.0 * d.sqrt_c8 - 1.0;
  d.c11 = 1.0 - h.c1 - 2.0 * d.c4 + (2.0 / h.c3) * d.sqrt_c9;
  d.c12 = d.c4 + d.sqrt_c8;
  d.c13 = -d.c4 + (d.sqrt_c9 - d.c5) / h.c3;
  return d;
}

double quantization_residual(const NUDerived& d, const HypergeometricCoefficients& h, int n) {
  const double nn = static_cast<double>(n);
  const double odd = 2.0 * nn + 1.0;
  return (h.c2 - h.c3) * nn + h.c3 * nn * nn - odd * d.c5 + odd * (d.sqrt_c9 + h.c3 * d.sqrt_c8) +
         d.c7 + 2.0 * h.c3 * d.c8 + 2.0 * d.sqrt_c8 * d.sqrt_c9;
}

double quantization_residual(const HypergeometricCoefficients& h, int n, RootBranch c8_branch) {
  if (n < 0) {
    throw Error(ErrorCode::invalid_argument, "quantization_residual: n must be non-negative");
  }
  return quantization_residual(derive_parameters(h, c8_branch), h, n);
}

double tau_prime(const NUDerived& d) {
  return -2.0 * d.c3 - 2.0 * (d.sqrt_c9 + d.c3 * d.sqrt_c8);
}

double k_plus(const NUDerived& d) {
  return -(d.c7 + 2.0 * d.c3 * d.c8) + 2.0 * d.sqrt_c8 * d.sqrt_c9;
}

SolutionExponents solution_exponents(const NUDerived& d) {
  return {d.c10, d.c11, d.c12, d.c13};
}

} // namespace kgspec::nu
