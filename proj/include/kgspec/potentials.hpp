#pragma once

// Potential catalog, dimensional bookkeeping, and the map from
// (model, trial energy, sign branch) to the NU coefficients.

#include "kgspec/nu_param.hpp"

#include <variant>

namespace kgspec {

/// 4 V1 z/(1-qz)^2 - V2/(1-qz) - V3 qz/(1-qz), z = exp(-2 alpha r)
struct EckartType {
  double v1 = 0.0, v2 = 0.0, v3 = 0.0, q = 1.0, alpha = 1.0;
};

/// 4 V1 z/(1+qz)^2 - V2/(1+qz) + V3 qz/(1+qz), z = exp(-2 alpha r)
struct RosenMorseType {
  double v1 = 0.0, v2 = 0.0, v3 = 0.0, q = 1.0, alpha = 1.0;
};

/// -V0 exp(-alpha r)/(1 - exp(-alpha r))
struct Hulthen {
  double v0 = 0.0, alpha = 1.0;
};

/// -V0 exp(-alpha r)/(1 + exp(-alpha r))
struct WoodsSaxon {
  double v0 = 0.0, alpha = 1.0;
};

/// V1 csch^2(alpha r) - V2 coth(alpha r)
struct StandardEckart {
  double v1 = 0.0, v2 = 0.0, alpha = 1.0;
};

/// -V1 sech_q^2(alpha r) + V2 tanh_q(alpha r); the Rosen-Morse type with
/// V1 -> -V1, V2 -> -V2 (and V3 = V2).
struct RosenMorseWell {
  double v1 = 0.0, v2 = 0.0, q = 1.0, alpha = 1.0;
};

/// PT-symmetric trigonometric Rosen-Morse, V1 csc^2(alpha x) - V2 cot(alpha x)
/// on 0 < x < pi/alpha, with V1 = a(a+1), V2 = 2b.
struct TrigRosenMorse {
  double a = 0.0, b = 0.0, alpha = 1.0;
  double v1() const noexcept { return a * (a + 1.0); }
  double v2() const noexcept { return 2.0 * b; }
};

using PotentialModel = std::variant<EckartType, RosenMorseType, Hulthen, WoodsSaxon, StandardEckart,
                                    RosenMorseWell, TrigRosenMorse>;

enum class Family { eckart_like, rosen_morse_like, trigonometric };

/// Every model expressed through the three-coupling form of its family.
/// Hulthen and Woods-Saxon halve alpha (their exponent is alpha r, not 2 alpha r).
struct CanonicalForm {
  Family family = Family::eckart_like;
  double v1 = 0.0, v2 = 0.0, v3 = 0.0, q = 1.0, alpha = 1.0;
};

CanonicalForm canonical(const PotentialModel& m);

/// Throws Error(parameter) unless alpha > 0 and q > 0.
void validate(const PotentialModel& m);

const char* model_name(const PotentialModel& m);

/// True when every coupling of the model is zero.
bool is_free(const PotentialModel& m);

/// V(r). Rosen-Morse-family models may be evaluated at r <= 0 when
/// `full_line` is set; otherwise r must be positive (and below pi/alpha for
/// the trigonometric model).
double evaluate_potential(const PotentialModel& m, double r, bool full_line = false);

/// Sign of the equally mixed branch, S(r) = sign * V(r).
enum class Sign : int { plus = 1, minus = -1 };

inline double to_double(Sign s) noexcept { return static_cast<double>(static_cast<int>(s)); }

struct DimensionalNumbers {
  int D = 3;
  int l = 0;
  double l_prime = 0.0;
  int script_m = 3;

  /// l'(l'+1) = ((M - 2)^2 - 1)/4
  double centrifugal_strength() const noexcept { return l_prime * (l_prime + 1.0); }
};

DimensionalNumbers dimensional_numbers(int D, int l);

/// 4 alpha^2 l'(l'+1) e^{-2 alpha r}/(1 - q e^{-2 alpha r})^2
double centrifugal_approximation(const DimensionalNumbers& dn, double q, double alpha, double r);

/// Energy-dependent dimensionless couplings. `scale` is Q = 2 hbar c alpha in
/// relativistic sets and T = 2 hbar alpha in non-relativistic ones.
struct CouplingSet {
  double epsilon = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double lambda = 0.0;
  double scale = 0.0;
};

/// Relativistic couplings of the canonical form. Throws Error(window) when
/// |E| > M, Error(unsupported) for the trigonometric model.
CouplingSet couplings(const PotentialModel& m, double energy, Sign sign, double mass,
                      const DimensionalNumbers& dn, double hbar_c = 1.0);

/// Non-relativistic couplings for u'' + (2M/hbar^2)(E - f V) u - L u = 0 with
/// f = potential_factor (1 for the potential V itself, 2 for V + S = 2V).
/// Requires E <= 0.
CouplingSet nonrelativistic_couplings(const PotentialModel& m, double energy, double mass,
                                      const DimensionalNumbers& dn, double potential_factor,
                                      double hbar = 1.0);

/// c1 = 1, c2 = c3 = +q (Eckart-like) or -q (Rosen-Morse-like).
nu::HypergeometricCoefficients to_hypergeometric(const CouplingSet& cs, Family family, double q);

/// -V2/(alpha x) + V1/(alpha x)^2, optionally plus V1/3 + V2 x/3.
double trm_small_x_expansion(const TrigRosenMorse& m, double x, bool linear_correction = false);

enum class CentrifugalTerm { none, approximate, exact };

/// Coefficient Q(r; E) of u'' + Q u = 0 for the equally mixed KG equation:
/// (E^2 - M^2 - 2 (E + sign M) V(r)) / (hbar c)^2 - L(r).
double kg_coefficient(const PotentialModel& m, Sign sign, const DimensionalNumbers& dn, double mass,
                      double energy, double r, CentrifugalTerm centrifugal, double hbar_c = 1.0,
                      bool full_line = false);

/// Coefficient of the Schrodinger form: (2M/hbar^2)(E - f V(r)) - L(r).
double schrodinger_coefficient(const PotentialModel& m, const DimensionalNumbers& dn, double mass,
                               double energy, double r, double potential_factor,
                               CentrifugalTerm centrifugal, double hbar = 1.0,
                               bool full_line = false);

} // namespace kgspec
