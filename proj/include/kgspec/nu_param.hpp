#pragma once

// Parametric Nikiforov-Uvarov recipe for
//
//   [z(1 - c3 z)]^2 u'' + z(1 - c3 z)(c1 - c2 z) u' + (-A z^2 + B z - C) u = 0,
//
// i.e. sigma(z) = z(1 - c3 z), tau~(z) = c1 - c2 z, sigma~(z) = -A z^2 + B z - C.

namespace kgspec::nu {

struct HypergeometricCoefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

/// Which root of c8 enters pi(z). The recipe commits to the principal root;
/// the negative root is the other Frobenius exponent at z = 0 and is needed
/// to describe roots of the squared energy equations.
enum class RootBranch { principal, negative };

/// Which k the discriminant condition selects. Only k_minus is used.
enum class KBranch { plus, minus };
inline constexpr KBranch kSelectedKBranch = KBranch::minus;

struct NUDerived {
  double c4 = 0.0, c5 = 0.0, c6 = 0.0, c7 = 0.0, c8 = 0.0, c9 = 0.0;
  double c10 = 0.0, c11 = 0.0, c12 = 0.0, c13 = 0.0;
  double k_minus = 0.0;
  double c3 = 0.0; // copied from the input, tau'(z) depends on it
  // The roots actually used for sqrt(c8) and sqrt(c9).
  double sqrt_c8 = 0.0;
  double sqrt_c9 = 0.0;
};

/// Throws Error(parameter) when c3 == 0 and Error(complex_branch) when c8 < 0
/// or c9 < 0.
NUDerived derive_parameters(const HypergeometricCoefficients& h,
                            RootBranch c8_branch = RootBranch::principal);

/// Left-hand side of the quantization condition; zero for an eigenvalue.
double quantization_residual(const HypergeometricCoefficients& h, int n,
                             RootBranch c8_branch = RootBranch::principal);

/// Same condition evaluated on an already derived set (lets callers vary one
/// derived quantity with the others held fixed).
double quantization_residual(const NUDerived& d, const HypergeometricCoefficients& h, int n);

/// tau'(z) = -2 c3 - 2 (sqrt(c9) + c3 sqrt(c8)); the recipe requires it negative.
double tau_prime(const NUDerived& d);

/// k_plus for reference; not used by the solver.
double k_plus(const NUDerived& d);

struct SolutionExponents {
  // rho(z) = z^c10 (1 - c3 z)^c11, also the Jacobi parameters of y_n
  double rho_z = 0.0;
  double rho_one_minus = 0.0;
  // phi(z) = z^c12 (1 - c3 z)^c13
  double phi_z = 0.0;
  double phi_one_minus = 0.0;
};

/// u(z) = N z^c12 (1 - c3 z)^c13 P_n^{(c10, c11)}(1 - 2 c3 z)
SolutionExponents solution_exponents(const NUDerived& d);

} // namespace kgspec::nu
