#include "kgspec/spectrum.hpp"

#include "kgspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kgspec {

namespace {

template <class... Ts> struct Overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_window(double mass, double energy) {
  if (!(mass > 0.0)) {
    throw Error(ErrorCode::parameter, "mass must be positive");
  }
  if (!(std::abs(energy) < mass)) {
    throw Error(ErrorCode::window, "energy " + std::to_string(energy) + " outside (-M, M)");
  }
}

void check_s_wave(const DimensionalNumbers& dn) {
  if (dn.l != 0 || dn.D != 3) {
    throw Error(ErrorCode::s_wave_only,
                "Rosen-Morse family is solved for s-waves in three dimensions only");
  }
}

// a^2 x^2 + b^2/(a^2 x^2) + c, the common right-hand side shape; infinite at x = 0
double oscillator_rhs(double a2, double x, double b2, double c) {
  if (x == 0.0) return kInf;
  const double x2 = x * x;
  return a2 * x2 + b2 / (a2 * x2) + c;
}

// Exponent of the (1 -+ qz) factor for the canonical couplings. nullopt when
// the radicand is negative.
std::optional<double> family_w(const CanonicalForm& c, double beta) {
  if (c.family == Family::eckart_like) {
    const double rad = 1.0 + 4.0 * beta / c.q;
    if (rad < 0.0) return std::nullopt;
    return 0.5 * (1.0 + std::sqrt(rad));
  }
  const double rad = 1.0 - 4.0 * beta / c.q;
  if (rad < 0.0) return std::nullopt;
  return 0.5 * (1.0 - std::sqrt(rad));
}

std::optional<double> canonical_residual(const CanonicalForm& c, int n,
                                         const DimensionalNumbers& dn, Sign sign, double mass,
                                         double energy, double hbar_c) {
  const double k = energy + to_double(sign) * mass;
  const double a = hbar_c * c.alpha;
  const double a2 = a * a;
  const double lhs = (mass - energy) * (mass + energy);
  if (c.family == Family::trigonometric) {
    const double lp = 1.0 + 2.0 * dn.l_prime;
    const double rad = lp * lp + 8.0 * k * c.v1 / a2;
    if (rad < 0.0) return std::nullopt;
    const double x = n + 0.5 * (1.0 + std::sqrt(rad));
    return lhs - (k * k * c.v2 * c.v2 / (a2 * x * x) - a2 * x * x);
  }
  double beta = 8.0 * k * c.v1 / (4.0 * a2);
  if (c.family == Family::eckart_like) beta += dn.centrifugal_strength();
  const auto w = family_w(c, beta);
  if (!w) return std::nullopt;
  const double sum = c.v2 + c.v3;
  return lhs - oscillator_rhs(a2, n + *w, 0.25 * k * k * sum * sum, k * (c.v2 - c.v3));
}

void check_quantum_numbers(const PotentialModel& m, int n, const DimensionalNumbers& dn) {
  if (n < 0) {
    throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  }
  const CanonicalForm c = canonical(m);
  if (c.family == Family::rosen_morse_like) check_s_wave(dn);
  if (std::holds_alternative<WoodsSaxon>(m) && n == 0) {
    throw Error(ErrorCode::parameter, "Woods-Saxon levels start at n = 1");
  }
}

} // namespace

std::optional<double> generic_energy_residual(const PotentialModel& m, int n,
                                              const DimensionalNumbers& dn, Sign sign, double mass,
                                              double energy, double hbar_c) {
  validate(m);
  check_window(mass, energy);
  check_quantum_numbers(m, n, dn);
  return canonical_residual(canonical(m), n, dn, sign, mass, energy, hbar_c);
}

std::optional<double> energy_residual(const PotentialModel& m, int n, const DimensionalNumbers& dn,
                                      Sign sign, double mass, double energy, double hbar_c) {
  validate(m);
  check_window(mass, energy);
  check_quantum_numbers(m, n, dn);
  const double k = energy + to_double(sign) * mass;
  const double lhs = (mass - energy) * (mass + energy);
  const double lp = 1.0 + 2.0 * dn.l_prime;

  return std::visit(
      Overloaded{
          [&](const Hulthen& p) -> std::optional<double> {
            const double a = hbar_c * p.alpha;
            const double x = n + 0.5 * (dn.D + 2 * dn.l - 1);
            if (x == 0.0) return kInf;
            const double bracket = 0.5 * a * x - k * p.v0 / (a * x);
            return lhs - bracket * bracket;
          },
          [&](const WoodsSaxon& p) -> std::optional<double> {
            const double a = hbar_c * p.alpha;
            const double root = 0.5 * a * n + k * p.v0 / (a * n);
            return lhs - root * root;
          },
          [&](const StandardEckart& p) -> std::optional<double> {
            const double a2 = hbar_c * hbar_c * p.alpha * p.alpha;
            const double rad = lp * lp + 8.0 * k * p.v1 / a2;
            if (rad < 0.0) return std::nullopt;
            const double x = n + 0.5 * (1.0 + std::sqrt(rad));
            return lhs - oscillator_rhs(a2, x, k * k * p.v2 * p.v2, 0.0);
          },
          [&](const RosenMorseWell& p) -> std::optional<double> {
            const double a2 = hbar_c * hbar_c * p.alpha * p.alpha;
            const double rad = 1.0 + 8.0 * k * p.v1 / (p.q * a2);
            if (rad < 0.0) return std::nullopt;
            const double x = n + 0.5 * (1.0 - std::sqrt(rad));
            return lhs - oscillator_rhs(a2, x, k * k * p.v2 * p.v2, 0.0);
          },
          [&](const auto&) -> std::optional<double> {
            return canonical_residual(canonical(m), n, dn, sign, mass, energy, hbar_c);
          },
      },
      m);
}

BoundState make_bound_state(const PotentialModel& m, int n, const DimensionalNumbers& dn, Sign sign,
                            double mass, double energy, double hbar_c) {
  validate(m);
  check_window(mass, energy);
  check_quantum_numbers(m, n, dn);
  const CanonicalForm c = canonical(m);

  BoundState b;
  b.n = n;
  b.l = dn.l;
  b.D = dn.D;
  b.sign = sign;
  b.energy = energy;
  b.mass = mass;
  b.hbar_c = hbar_c;
  b.residual = energy_residual(m, n, dn, sign, mass, energy, hbar_c)
                   .value_or(std::numeric_limits<double>::quiet_NaN());

  WaveExponents& ex = b.exponents;
  Admissibility& fl = b.flags;
  if (c.family == Family::trigonometric) {
    // The closed form is complex; only the real exponent data are kept.
    const double k = energy + to_double(sign) * mass;
    const double a2 = hbar_c * hbar_c * c.alpha * c.alpha;
    const double lp = 1.0 + 2.0 * dn.l_prime;
    const double rad = lp * lp + 8.0 * k * c.v1 / a2;
    ex.w = rad >= 0.0 ? 0.5 * (1.0 + std::sqrt(rad)) : std::numeric_limits<double>::quiet_NaN();
    ex.p = 0.5 * (n + ex.w);
  } else {
    const CouplingSet cs = couplings(m, energy, sign, mass, dn, hbar_c);
    const auto w = family_w(c, cs.beta);
    if (!w) {
      throw Error(ErrorCode::complex_branch, "make_bound_state: complex w at E = " +
                                                 std::to_string(energy));
    }
    ex.w = *w;
    const double x = n + ex.w;
    // The quantization condition forces sqrt(c8) = -[x - (gamma+lambda)/x]/2;
    // its sign picks the Frobenius branch that the closed form realizes.
    ex.p = -0.5 * (x - (cs.gamma + cs.lambda) / x);

    try {
      const auto h = to_hypergeometric(cs, c.family, c.q);
      const auto d = nu::derive_parameters(
          h, ex.p >= 0.0 ? nu::RootBranch::principal : nu::RootBranch::negative);
      fl.tau_prime_negative = nu::tau_prime(d) < 0.0;
    } catch (const Error&) {
      fl.tau_prime_negative = false;
    }
    fl.full_line_decay =
        c.family == Family::rosen_morse_like && ex.p > 0.0 && ex.p + ex.w + n < 0.0;
  }
  ex.jacobi_alpha = 2.0 * ex.p;
  ex.jacobi_beta = 2.0 * ex.w - 1.0;
  fl.p_positive = ex.p > 0.0;
  fl.w_positive = ex.w > 0.0;
  fl.classical_jacobi_range = ex.jacobi_alpha > -1.0 && ex.jacobi_beta > -1.0;
  return b;
}

namespace {

struct Sample {
  double e = 0.0;
  double v = 0.0;
  bool ok = false;
};

Sample sample(const PotentialModel& m, int n, const DimensionalNumbers& dn, Sign sign, double mass,
              double e, double hbar_c) {
  const auto v = energy_residual(m, n, dn, sign, mass, e, hbar_c);
  if (!v || !std::isfinite(*v)) return {e, 0.0, false};
  return {e, *v, true};
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

} // namespace

std::vector<BoundState> find_bound_states(const PotentialModel& m, int n,
                                          const DimensionalNumbers& dn,
                                          const std::vector<Sign>& branches, double mass,
                                          const ScanConfig& scan, double hbar_c) {
  validate(m);
  if (scan.grid_points < 64) {
    throw Error(ErrorCode::invalid_argument, "scan grid needs at least 64 points");
  }
  if (!(mass > 0.0)) {
    throw Error(ErrorCode::parameter, "mass must be positive");
  }
  check_quantum_numbers(m, n, dn);
  std::vector<BoundState> out;
  if (is_free(m)) return out;

  const double tol = scan.tolerance(mass);
  const double emax = mass * (1.0 - scan.window_shrink);
  const int count = scan.grid_points;

  for (const Sign sign : branches) {
    auto eval = [&](double e) { return sample(m, n, dn, sign, mass, e, hbar_c); };

    std::vector<Sample> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const double e = -emax + 2.0 * emax * static_cast<double>(i) / (count - 1);
      grid[static_cast<std::size_t>(i)] = eval(e);
    }

    std::vector<double> roots;
    auto bisect = [&](Sample lo, Sample hi) {
      const double start = std::max(std::abs(lo.v), std::abs(hi.v));
      for (int it = 0; it < 400 && std::abs(hi.e - lo.e) > tol; ++it) {
        const Sample mid = eval(0.5 * (lo.e + hi.e));
        if (!mid.ok) return; // bracket straddles a singular or complex point
        if (mid.v == 0.0) {
          lo = hi = mid;
          break;
        }
        if (opposite(lo.v, mid.v)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const Sample root = eval(0.5 * (lo.e + hi.e));
      // a sign change through a pole of the residual grows instead of vanishing
      if (root.ok && std::abs(root.v) < start) roots.push_back(root.e);
    };
    // Edge of the real window between a valid and an invalid grid point;
    // returns the valid-side sample closest to the edge.
    auto window_edge = [&](Sample valid, double invalid_e) {
      double good = valid.e;
      double bad = invalid_e;
      Sample last = valid;
      for (int it = 0; it < 200 && std::abs(bad - good) > 0.25 * tol; ++it) {
        const Sample mid = eval(0.5 * (good + bad));
        if (mid.ok) {
          good = mid.e;
          last = mid;
        } else {
          bad = mid.e;
        }
      }
      return last;
    };

    for (int i = 0; i + 1 < count; ++i) {
      const Sample& a = grid[static_cast<std::size_t>(i)];
      const Sample& b = grid[static_cast<std::size_t>(i + 1)];
      if (a.ok && a.v == 0.0) {
        roots.push_back(a.e);
        continue;
      }
      if (a.ok && b.ok) {
        if (opposite(a.v, b.v)) bisect(a, b);
      } else if (a.ok != b.ok) {
        const Sample& valid = a.ok ? a : b;
        const Sample edge = window_edge(valid, a.ok ? b.e : a.e);
        if (opposite(valid.v, edge.v)) {
          a.ok ? bisect(valid, edge) : bisect(edge, valid);
        }
      }
    }
    if (grid.back().ok && grid.back().v == 0.0) roots.push_back(grid.back().e);

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double x, double y) { return std::abs(x - y) <= 10.0 * tol; }),
                roots.end());
    for (const double e : roots) {
      out.push_back(make_bound_state(m, n, dn, sign, mass, e, hbar_c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BoundState& x, const BoundState& y) { return x.energy > y.energy; });
  return out;
}

double potential_factor(NonrelMode mode) noexcept {
  return mode == NonrelMode::kg_limit_2v ? 2.0 : 1.0;
}

double nonrelativistic_energy(const PotentialModel& m, int n, const DimensionalNumbers& dn,
                              double mass, NonrelMode mode, double hbar) {
  validate(m);
  const CanonicalForm c = canonical(m);
  if (c.family == Family::trigonometric) {
    throw Error(ErrorCode::unsupported, "nonrelativistic_energy: trigonometric model");
  }
  check_quantum_numbers(m, n, dn);
  if (!(mass > 0.0)) {
    throw Error(ErrorCode::parameter, "mass must be positive");
  }
  const double weight = mass * potential_factor(mode);
  const double a = hbar * c.alpha;
  const double a2 = a * a;
  double beta = 2.0 * weight * c.v1 / a2;
  if (c.family == Family::eckart_like) beta += dn.centrifugal_strength();
  const auto w = family_w(c, beta);
  if (!w) {
    throw Error(ErrorCode::complex_branch, "nonrelativistic_energy: complex w");
  }
  const double x = n + *w;
  if (x == 0.0) {
    throw Error(ErrorCode::pole, "nonrelativistic_energy: n + w vanishes");
  }
  const double sum = c.v2 + c.v3;
  return -oscillator_rhs(a2, x, 0.25 * weight * weight * sum * sum, weight * (c.v2 - c.v3)) /
         (2.0 * mass);
}

ChargeLabel classify_branch(const BoundState& b) noexcept {
  return b.energy >= 0.0 ? ChargeLabel::particle : ChargeLabel::antiparticle;
}

} // namespace kgspec
