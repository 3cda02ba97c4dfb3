#pragma once

// Closed-form radial wavefunctions, numeric normalization, nodes and the
// pointwise ODE check.

#include "kgspec/spectrum.hpp"

#include <iosfwd>
#include <vector>

namespace kgspec {

struct GridConfig {
  int samples = 400;           // points in the emitted sample
  int panels = 200;            // uniform Gauss-Legendre panels for the norm integral
  double tail_tolerance = 1e-12;
  bool full_line = false;      // Rosen-Morse family: sample and normalize on the whole line
  double r_max = 0.0;          // <= 0 picks the outer end from the decay rate
};

struct RadialSample {
  std::vector<double> grid;
  std::vector<double> u_values;
  std::vector<double> R_values; // equals u on the full line (one-dimensional problem)
  double normalization_constant = 1.0;
  int node_count = 0;
  double max_ode_residual = 0.0;
  int D = 3;
  bool full_line = false;
};

/// Unnormalized u(r) = z^p (1 -+ qz)^w P_n^{(2p, 2w-1)}(1 -+ 2qz), z = exp(-2 alpha r).
/// Rosen-Morse-family states accept r <= 0 when `full_line` is set.
/// Throws Error(domain) for r <= 0 otherwise, Error(unsupported) for the
/// trigonometric model (its closed form is complex).
double radial_u(const BoundState& b, const PotentialModel& m, double r, bool full_line = false);

/// Same function through the terminating 2F1:
/// z^p (1 -+ qz)^w binom(n + 2p, n) 2F1(-n, n + 2p + 2w; 2p + 1; +-qz).
double radial_u_hypergeometric(const BoundState& b, const PotentialModel& m, double r,
                               bool full_line = false);

/// R(r) = normalization r^{-(D-1)/2} u(r).
double radial_R(const BoundState& b, const PotentialModel& m, double r, int D,
                double normalization = 1.0);

/// Positive N with N^2 * integral of u^2 = 1. Throws Error(non_normalizable)
/// when the state does not decay at a boundary of the chosen domain.
double normalization_constant(const BoundState& b, const PotentialModel& m,
                              const GridConfig& cfg = {});

RadialSample normalize(const BoundState& b, const PotentialModel& m, const GridConfig& cfg = {});

/// Unnormalized sample (constant 1) on (0, r_max], or [-r_max, r_max] in
/// full-line mode; r_max defaults to 20/alpha. No decay requirement.
RadialSample sample(const BoundState& b, const PotentialModel& m, const GridConfig& cfg = {});

/// Strict sign changes of u, ignoring |u| below 1e-12 max|u|.
int count_nodes(const RadialSample& s);

/// max |u'' + Q u| / max (|Q u| + |u''|) over the interior of `grid`, with
/// u'' from Richardson-refined central differences and Q built with the
/// approximated centrifugal term.
double ode_residual(const BoundState& b, const PotentialModel& m, const std::vector<double>& grid);

/// Default grid for ode_residual: 200 points on [0.05, 10]/alpha (full line:
/// [-10, 10]/alpha).
std::vector<double> residual_grid(const PotentialModel& m, bool full_line = false);

/// Header r,u,R; every value with 12 significant digits.
void write_csv(const RadialSample& s, std::ostream& os);

} // namespace kgspec
