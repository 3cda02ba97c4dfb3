#pragma once

// Bound-state energies: energy-equation residuals, the window scanner, and
// the closed-form non-relativistic spectra.

#include "kgspec/potentials.hpp"

#include <optional>
#include <vector>

namespace kgspec {

struct WaveExponents {
  double p = 0.0;            // exponent of z
  double w = 0.0;            // exponent of (1 -+ qz)
  double jacobi_alpha = 0.0; // 2p
  double jacobi_beta = 0.0;  // 2w - 1
};

struct Admissibility {
  bool p_positive = false;
  bool w_positive = false;
  bool tau_prime_negative = false;
  bool classical_jacobi_range = false;
  bool full_line_decay = false; // Rosen-Morse family only: decays at both ends of the line
};

struct BoundState {
  int n = 0;
  int l = 0;
  int D = 3;
  Sign sign = Sign::plus;
  double energy = 0.0;
  double mass = 1.0;
  double hbar_c = 1.0;
  double residual = 0.0;
  WaveExponents exponents;
  Admissibility flags;
};

struct ScanConfig {
  int grid_points = 2048;
  double tol_root = 0.0;          // absolute; <= 0 selects 1e-10 * M
  double window_shrink = 1e-9;    // scan (-M(1 - eta), M(1 - eta))

  double tolerance(double mass) const noexcept { return tol_root > 0.0 ? tol_root : 1e-10 * mass; }
};

/// LHS - RHS of the model's energy equation in units of energy^2, written as
/// (M^2 - E^2) - f(E). nullopt marks the complex window (negative radicand
/// inside w). Throws Error(window) for |E| >= M, Error(s_wave_only) for the
/// Rosen-Morse family off the s-wave, Error(parameter) for Woods-Saxon n = 0.
std::optional<double> energy_residual(const PotentialModel& m, int n, const DimensionalNumbers& dn,
                                      Sign sign, double mass, double energy, double hbar_c = 1.0);

/// The same energy equation reached through the canonical three-coupling form
/// of the model's family, bypassing the model-specific formula.
std::optional<double> generic_energy_residual(const PotentialModel& m, int n,
                                              const DimensionalNumbers& dn, Sign sign, double mass,
                                              double energy, double hbar_c = 1.0);

/// Exponents and admissibility flags of a state at `energy` (normally a root).
BoundState make_bound_state(const PotentialModel& m, int n, const DimensionalNumbers& dn, Sign sign,
                            double mass, double energy, double hbar_c = 1.0);

/// Every sign change of energy_residual on the scan grid, refined by
/// bisection. Sorted by descending energy. A model with all couplings zero
/// has no bound states and yields an empty list.
std::vector<BoundState> find_bound_states(const PotentialModel& m, int n,
                                          const DimensionalNumbers& dn,
                                          const std::vector<Sign>& branches, double mass,
                                          const ScanConfig& scan = {}, double hbar_c = 1.0);

enum class NonrelMode {
  schrodinger_v, // Schrodinger equation with the potential V
  kg_limit_2v,   // non-relativistic limit of S = V, i.e. the sum potential 2V
};

double potential_factor(NonrelMode mode) noexcept;

/// Closed-form non-relativistic eigenvalue
///   E = -(1/2M) [ (hbar a)^2 (n+d)^2 + (M f)^2 (V2+V3)^2 / (4 (hbar a)^2 (n+d)^2) + M f (V2 - V3) ]
/// in the canonical couplings (a = canonical alpha, f = 1 or 2 per mode).
/// Throws Error(unsupported) for the trigonometric model, Error(parameter)
/// for Woods-Saxon with n = 0, Error(complex_branch) for a complex d.
double nonrelativistic_energy(const PotentialModel& m, int n, const DimensionalNumbers& dn,
                              double mass, NonrelMode mode, double hbar = 1.0);

enum class ChargeLabel { particle, antiparticle };

/// E >= 0 is labelled particle (E = 0 included).
ChargeLabel classify_branch(const BoundState& b) noexcept;

} // namespace kgspec
