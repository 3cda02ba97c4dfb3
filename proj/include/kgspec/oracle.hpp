#pragma once

// Independent eigenvalue oracle: shooting on u'' + Q(x; E) u = 0.

#include "kgspec/spectrum.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace kgspec {

enum class OracleMode {
  relativistic_approx,            // approximated centrifugal term; the closed forms solve it exactly
  relativistic_exact_centrifugal, // l'(l'+1)/r^2
  nonrel_v,                       // 2M(E - V) - L
  nonrel_2v,                      // 2M(E - 2V) - L
};

enum class DomainKind {
  half_line, // 0 < r < inf, u regular at the origin
  full_line, // -inf < x < inf (Rosen-Morse family)
  interval,  // 0 < x < pi/alpha (trigonometric model)
};

struct EffectiveEquation {
  std::function<double(double x, double energy)> coefficient;
  DomainKind domain = DomainKind::half_line;
  double upper = 0.0;        // right end of the interval domain
  double alpha = 1.0;        // length scale 1/alpha
  double energy_scale = 1.0; // M; sets the bisection tolerance
  double energy_min = -1.0;  // search window for eigenvalues
  double energy_max = 1.0;
};

/// The domain defaults by family: Eckart-like half line, Rosen-Morse-like
/// full line, trigonometric interval. Throws Error(unsupported) for a
/// non-relativistic mode on the trigonometric model and Error(s_wave_only)
/// for the Rosen-Morse family off the s-wave.
EffectiveEquation build_effective(const PotentialModel& m, Sign sign, const DimensionalNumbers& dn,
                                  double mass, OracleMode mode, double hbar_c = 1.0,
                                  std::optional<DomainKind> domain = std::nullopt);

struct IntegratorConfig {
  double step_scale = 0.01;  // RK4 step: step_scale / sqrt(|Q| + alpha^2) (log-scaled near singular ends)
  double tolerance = 0.0;    // absolute energy tolerance; <= 0 selects 1e-9 * energy_scale
  double inner_start = 1e-6; // first point off a singular end, units of 1/alpha
  double far_decay = 40.0;   // integral of sqrt(-Q) between the match point and a far start
};

/// Fixed geometry (matching point, far starting points) for one energy region.
class Shooter {
public:
  Shooter(EffectiveEquation eq, double reference_energy, IntegratorConfig cfg = {});

  /// Normalized Wronskian of the two boundary solutions at the matching
  /// point; zero at an eigenvalue. nullopt when no decaying solution exists
  /// at a far end (energy in the continuum) or no regular one at a singular
  /// end (attraction stronger than -1/(4 r^2)).
  std::optional<double> mismatch(double energy) const;

  double match_point() const noexcept { return match_; }

private:
  struct Side {
    double u = 0.0;
    double du = 0.0;
  };
  std::optional<Side> singular_side(double end, double direction, double energy) const;
  std::optional<Side> far_side(double start, double direction, double energy) const;

  EffectiveEquation eq_;
  IntegratorConfig cfg_;
  double match_ = 0.0;
  double left_far_ = 0.0;
  double right_far_ = 0.0;
};

/// Bisection on the mismatch over [lo, hi] to the configured tolerance.
/// Throws Error(no_sign_change) when the mismatch has equal signs at the ends.
double shoot_eigenvalue(const EffectiveEquation& eq, double lo, double hi,
                        const IntegratorConfig& cfg = {});

/// Every sign change of the mismatch on a uniform grid over [lo, hi].
std::vector<double> scan_eigenvalues(const EffectiveEquation& eq, double lo, double hi, int grid,
                                     const IntegratorConfig& cfg = {});

/// The eigenvalue nearest to `guess`, found in windows widening up to
/// max_window * energy_scale. Throws Error(no_sign_change) if none.
double shoot_near(const EffectiveEquation& eq, double guess, const IntegratorConfig& cfg = {},
                  double max_window = 0.25);

struct OracleComparison {
  BoundState state;
  std::optional<double> shot;
  double rel_error = 0.0;
  bool agree = false;
};

/// Shoots near every closed-form root of find_bound_states on the
/// approximated equation.
std::vector<OracleComparison> compare_closed_form(const PotentialModel& m, int n,
                                                  const DimensionalNumbers& dn,
                                                  const std::vector<Sign>& branches, double mass,
                                                  double rel_tol, const ScanConfig& scan = {},
                                                  const IntegratorConfig& cfg = {},
                                                  double hbar_c = 1.0);

struct NonrelComparison {
  double closed = 0.0;
  std::optional<double> shot;
  double rel_error = 0.0;
  bool agree = false;
};

NonrelComparison compare_nonrelativistic(const PotentialModel& m, int n, const DimensionalNumbers& dn,
                                         double mass, NonrelMode mode, double rel_tol,
                                         const IntegratorConfig& cfg = {}, double hbar = 1.0);

struct ApproximationRow {
  double alpha = 0.0;
  double closed = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
};

/// For each alpha: the highest admissible closed-form root (decaying state)
/// and the exact-centrifugal shooting eigenvalue nearest to it.
std::vector<ApproximationRow> approximation_error(const PotentialModel& m, int n,
                                                  const DimensionalNumbers& dn, Sign sign,
                                                  double mass, const std::vector<double>& alphas,
                                                  const ScanConfig& scan = {},
                                                  const IntegratorConfig& cfg = {},
                                                  double hbar_c = 1.0);

/// Header alpha,E_closed,E_exact,abs_error.
void write_csv(const std::vector<ApproximationRow>& rows, std::ostream& os);

/// Copy of the model with its own screening parameter replaced.
PotentialModel with_alpha(const PotentialModel& m, double alpha);

/// Whether the closed-form state decays on the domain the oracle uses for its family.
bool decays_on_domain(const BoundState& b, const PotentialModel& m);

} // namespace kgspec
