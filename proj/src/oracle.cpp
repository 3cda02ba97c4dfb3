#include "kgspec/oracle.hpp"

#include "kgspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

namespace kgspec {

namespace {

constexpr double kRescale = 1e200;

DomainKind default_domain(Family f) {
  switch (f) {
  case Family::eckart_like: return DomainKind::half_line;
  case Family::rosen_morse_like: return DomainKind::full_line;
  case Family::trigonometric: return DomainKind::interval;
  }
  return DomainKind::half_line;
}

} // namespace

EffectiveEquation build_effective(const PotentialModel& m, Sign sign, const DimensionalNumbers& dn,
                                  double mass, OracleMode mode, double hbar_c,
                                  std::optional<DomainKind> domain) {
  validate(m);
  const CanonicalForm c = canonical(m);
  if (!(mass > 0.0) || !(hbar_c > 0.0)) {
    throw Error(ErrorCode::parameter, "build_effective: mass and hbar_c must be positive");
  }
  const bool nonrel = mode == OracleMode::nonrel_v || mode == OracleMode::nonrel_2v;
  if (c.family == Family::trigonometric && nonrel) {
    throw Error(ErrorCode::unsupported, "build_effective: no non-relativistic form for the trigonometric model");
  }
  if (c.family == Family::rosen_morse_like && (dn.l != 0 || dn.D != 3)) {
    throw Error(ErrorCode::s_wave_only, "build_effective: Rosen-Morse family is s-wave only");
  }

  EffectiveEquation eq;
  eq.domain = domain.value_or(default_domain(c.family));
  if (eq.domain == DomainKind::full_line && c.family != Family::rosen_morse_like) {
    throw Error(ErrorCode::unsupported, "build_effective: full line needs a Rosen-Morse-family model");
  }
  if ((eq.domain == DomainKind::interval) != (c.family == Family::trigonometric)) {
    throw Error(ErrorCode::unsupported, "build_effective: interval domain is for the trigonometric model");
  }
  eq.alpha = c.alpha;
  eq.upper = c.family == Family::trigonometric ? std::numbers::pi / c.alpha : 0.0;
  eq.energy_scale = mass;
  const bool line = eq.domain == DomainKind::full_line;

  if (!nonrel) {
    const CentrifugalTerm ct = mode == OracleMode::relativistic_approx ? CentrifugalTerm::approximate
                                                                      : CentrifugalTerm::exact;
    eq.coefficient = [m, sign, dn, mass, hbar_c, ct, line](double x, double e) {
      return kg_coefficient(m, sign, dn, mass, e, x, ct, hbar_c, line);
    };
    eq.energy_min = -mass * (1.0 - 1e-9);
    eq.energy_max = mass * (1.0 - 1e-9);
    return eq;
  }

  const double factor = mode == OracleMode::nonrel_2v ? 2.0 : 1.0;
  eq.coefficient = [m, dn, mass, hbar_c, factor, line](double x, double e) {
    return schrodinger_coefficient(m, dn, mass, e, x, factor, CentrifugalTerm::approximate, hbar_c,
                                   line);
  };
  // continuum threshold from the far ends, bottom from a coarse scan
  const double far = 200.0 / c.alpha;
  double threshold = factor * evaluate_potential(m, far, line);
  if (line) threshold = std::min(threshold, factor * evaluate_potential(m, -far, true));
  double bottom = threshold;
  for (int i = 0; i <= 2000; ++i) {
    const double x = line ? -far + 2.0 * far * i / 2000.0 : 1e-3 / c.alpha * std::pow(2e5, i / 2000.0);
    const double v = factor * evaluate_potential(m, x, line);
    if (std::isfinite(v)) bottom = std::min(bottom, v);
  }
  eq.energy_max = threshold;
  eq.energy_min = bottom - 1e-9 * mass;
  return eq;
}

Shooter::Shooter(EffectiveEquation eq, double reference_energy, IntegratorConfig cfg)
    : eq_(std::move(eq)), cfg_(cfg) {
  const double a = eq_.alpha;
  auto q = [&](double x) { return eq_.coefficient(x, reference_energy); };

  std::vector<double> xs;
  switch (eq_.domain) {
  case DomainKind::half_line:
    for (int i = 0; i <= 800; ++i) xs.push_back(1e-3 / a * std::pow(2e5, i / 800.0));
    break;
  case DomainKind::full_line:
    for (int i = 0; i <= 2000; ++i) xs.push_back(-100.0 / a + 200.0 / a * i / 2000.0);
    break;
  case DomainKind::interval:
    for (int i = 1; i < 1000; ++i) xs.push_back(eq_.upper * i / 1000.0);
    break;
  }
  std::size_t best = 0;
  double best_q = -std::numeric_limits<double>::infinity();
  std::optional<std::size_t> outer_turning;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double v = q(xs[i]);
    if (v > best_q) {
      best_q = v;
      best = i;
    }
    if (v >= 0.0) outer_turning = i;
  }
  match_ = xs[best];
  if (eq_.domain == DomainKind::half_line && outer_turning) match_ = xs[*outer_turning];
  if (eq_.domain == DomainKind::interval) {
    match_ = std::clamp(match_, 1e-3 * eq_.upper, (1.0 - 1e-3) * eq_.upper);
  }

  // far starting points: enough decay between them and the matching point
  auto far_point = [&](double direction) {
    const double step = 0.02 / a;
    double acc = 0.0;
    double x = match_;
    for (int i = 0; i < 100000; ++i) {
      x += direction * step;
      acc += std::sqrt(std::max(-q(x), 0.0)) * step;
      if (acc >= cfg_.far_decay) break;
    }
    return x + direction * 1.0 / a;
  };
  if (eq_.domain != DomainKind::interval) right_far_ = far_point(+1.0);
  if (eq_.domain == DomainKind::full_line) left_far_ = far_point(-1.0);
}

// Frobenius start u ~ y^s at y = inner_start/alpha from a singular end, then
// RK4 in t = ln y, where u_tt - u_t + y^2 Q u = 0.
std::optional<Shooter::Side> Shooter::singular_side(double end, double direction,
                                                    double energy) const {
  const double y0 = cfg_.inner_start / eq_.alpha;
  const double y_end = std::abs(match_ - end);
  auto q = [&](double y) { return eq_.coefficient(end + direction * y, energy); };
  const double c = -y0 * y0 * q(y0);
  const double disc = 1.0 + 4.0 * c;
  if (disc < 0.0) return std::nullopt; // fall to the centre, no regular solution
  const double s = 0.5 * (1.0 + std::sqrt(disc));
  double u = 1.0;
  double v = s; // du/dt
  double t = std::log(y0);
  const double t_end = std::log(y_end);
  auto deriv = [&](double tt, double uu, double vv, double& du, double& dv) {
    const double y = std::exp(tt);
    du = vv;
    dv = vv - y * y * q(y) * uu;
  };
  while (t < t_end) {
    const double y = std::exp(t);
    double dt = std::min(0.05, cfg_.step_scale / std::sqrt(std::abs(y * y * q(y)) + 1.0));
    dt = std::min(dt, t_end - t);
    double k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
    deriv(t, u, v, k1u, k1v);
    deriv(t + 0.5 * dt, u + 0.5 * dt * k1u, v + 0.5 * dt * k1v, k2u, k2v);
    deriv(t + 0.5 * dt, u + 0.5 * dt * k2u, v + 0.5 * dt * k2v, k3u, k3v);
    deriv(t + dt, u + dt * k3u, v + dt * k3v, k4u, k4v);
    u += dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    t += dt;
    if (std::abs(u) > kRescale || std::abs(v) > kRescale) {
      u /= kRescale;
      v /= kRescale;
    }
  }
  return Side{u, direction * v / y_end};
}

// Decaying start at a far point, integrated toward the matching point.
std::optional<Shooter::Side> Shooter::far_side(double start, double direction, double energy) const {
  auto q = [&](double y) { return eq_.coefficient(start + direction * y, energy); };
  const double q0 = q(0.0);
  if (!(q0 < 0.0)) return std::nullopt;
  const double length = std::abs(match_ - start);
  const double a2 = eq_.alpha * eq_.alpha;
  double u = 1.0;
  double w = std::sqrt(-q0); // du/dy
  double y = 0.0;
  while (y < length) {
    double h = cfg_.step_scale / std::sqrt(std::abs(q(y)) + a2);
    h = std::min(h, length - y);
    const double k1u = w, k1w = -q(y) * u;
    const double k2u = w + 0.5 * h * k1w, k2w = -q(y + 0.5 * h) * (u + 0.5 * h * k1u);
    const double k3u = w + 0.5 * h * k2w, k3w = -q(y + 0.5 * h) * (u + 0.5 * h * k2u);
    const double k4u = w + h * k3w, k4w = -q(y + h) * (u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    y += h;
    if (std::abs(u) > kRescale || std::abs(w) > kRescale) {
      u /= kRescale;
      w /= kRescale;
    }
  }
  // x = start + direction * y, so du/dx = direction * du/dy
  return Side{u, direction * w};
}

std::optional<double> Shooter::mismatch(double energy) const {
  Side left;
  Side right;
  switch (eq_.domain) {
  case DomainKind::half_line: {
    const auto l = singular_side(0.0, +1.0, energy);
    const auto r = far_side(right_far_, -1.0, energy);
    if (!l || !r) return std::nullopt;
    left = *l;
    right = *r;
    break;
  }
  case DomainKind::full_line: {
    const auto l = far_side(left_far_, +1.0, energy);
    const auto r = far_side(right_far_, -1.0, energy);
    if (!l || !r) return std::nullopt;
    left = *l;
    right = *r;
    break;
  }
  case DomainKind::interval: {
    const auto l = singular_side(0.0, +1.0, energy);
    const auto r = singular_side(eq_.upper, -1.0, energy);
    if (!l || !r) return std::nullopt;
    left = *l;
    right = *r;
    break;
  }
  }
  const double k = std::sqrt(std::abs(eq_.coefficient(match_, energy))) + eq_.alpha;
  const double wronskian = left.u * right.du - left.du * right.u;
  const double norm = k * std::hypot(left.u, left.du / k) * std::hypot(right.u, right.du / k);
  if (!(norm > 0.0) || !std::isfinite(norm)) return std::nullopt;
  return wronskian / norm;
}

namespace {

double tolerance(const EffectiveEquation& eq, const IntegratorConfig& cfg) {
  return cfg.tolerance > 0.0 ? cfg.tolerance : 1e-9 * eq.energy_scale;
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

double bisect(const Shooter& sh, double lo, double flo, double hi, double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto fm = sh.mismatch(mid);
    if (!fm) {
      throw Error(ErrorCode::no_sign_change, "shooting: bracket leaves the region with a regular solution");
    }
    if (*fm == 0.0) return mid;
    if (opposite(flo, *fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = *fm;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

double shoot_eigenvalue(const EffectiveEquation& eq, double lo, double hi,
                        const IntegratorConfig& cfg) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::invalid_argument, "shoot_eigenvalue: need lo < hi");
  }
  const Shooter sh(eq, 0.5 * (lo + hi), cfg);
  const auto flo = sh.mismatch(lo);
  const auto fhi = sh.mismatch(hi);
  if (!flo || !fhi || !opposite(*flo, *fhi)) {
    if (flo && *flo == 0.0) return lo;
    if (fhi && *fhi == 0.0) return hi;
    throw Error(ErrorCode::no_sign_change, "shoot_eigenvalue: mismatch keeps its sign on [" +
                                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return bisect(sh, lo, *flo, hi, tolerance(eq, cfg));
}

std::vector<double> scan_eigenvalues(const EffectiveEquation& eq, double lo, double hi, int grid,
                                     const IntegratorConfig& cfg) {
  if (grid < 2 || !(lo < hi)) {
    throw Error(ErrorCode::invalid_argument, "scan_eigenvalues: need grid >= 2 and lo < hi");
  }
  const Shooter sh(eq, 0.5 * (lo + hi), cfg);
  std::vector<double> out;
  std::optional<double> prev;
  double prev_e = lo;
  for (int i = 0; i <= grid; ++i) {
    const double e = lo + (hi - lo) * i / grid;
    const auto f = sh.mismatch(e);
    if (f && prev && opposite(*prev, *f)) {
      out.push_back(bisect(sh, prev_e, *prev, e, tolerance(eq, cfg)));
    }
    prev = f;
    prev_e = e;
  }
  return out;
}

double shoot_near(const EffectiveEquation& eq, double guess, const IntegratorConfig& cfg,
                  double max_window) {
  const Shooter sh(eq, guess, cfg);
  const double tol = tolerance(eq, cfg);
  constexpr int kCells = 16;
  for (double delta = 1e-6 * eq.energy_scale; delta <= max_window * eq.energy_scale * 1.0001;
       delta *= 4.0) {
    const double lo = std::max(guess - delta, eq.energy_min);
    const double hi = std::min(guess + delta, eq.energy_max);
    if (!(lo < hi)) continue;
    std::optional<double> best;
    std::optional<double> prev;
    double prev_e = lo;
    for (int i = 0; i <= kCells; ++i) {
      const double e = lo + (hi - lo) * i / kCells;
      const auto f = sh.mismatch(e);
      if (f && *f == 0.0) {
        if (!best || std::abs(e - guess) < std::abs(*best - guess)) best = e;
      } else if (f && prev && opposite(*prev, *f)) {
        const double root = bisect(sh, prev_e, *prev, e, tol);
        if (!best || std::abs(root - guess) < std::abs(*best - guess)) best = root;
      }
      prev = f;
      prev_e = e;
    }
    if (best) return *best;
  }
  throw Error(ErrorCode::no_sign_change,
              "shoot_near: no eigenvalue within the search window around " + std::to_string(guess));
}

bool decays_on_domain(const BoundState& b, const PotentialModel& m) {
  switch (canonical(m).family) {
  case Family::eckart_like: return b.flags.p_positive && b.flags.w_positive;
  case Family::rosen_morse_like: return b.flags.full_line_decay;
  case Family::trigonometric: return true;
  }
  return false;
}

std::vector<OracleComparison> compare_closed_form(const PotentialModel& m, int n,
                                                  const DimensionalNumbers& dn,
                                                  const std::vector<Sign>& branches, double mass,
                                                  double rel_tol, const ScanConfig& scan,
                                                  const IntegratorConfig& cfg, double hbar_c) {
  std::vector<OracleComparison> out;
  for (const BoundState& b : find_bound_states(m, n, dn, branches, mass, scan, hbar_c)) {
    OracleComparison row;
    row.state = b;
    const EffectiveEquation eq =
        build_effective(m, b.sign, dn, mass, OracleMode::relativistic_approx, hbar_c);
    try {
      row.shot = shoot_near(eq, b.energy, cfg);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_sign_change) throw;
    }
    if (row.shot) {
      row.rel_error = std::abs(*row.shot - b.energy) / std::max(std::abs(b.energy), 1e-12 * mass);
      row.agree = row.rel_error <= rel_tol;
    } else {
      row.rel_error = std::numeric_limits<double>::infinity();
    }
    out.push_back(row);
  }
  return out;
}

NonrelComparison compare_nonrelativistic(const PotentialModel& m, int n, const DimensionalNumbers& dn,
                                         double mass, NonrelMode mode, double rel_tol,
                                         const IntegratorConfig& cfg, double hbar) {
  NonrelComparison row;
  row.closed = nonrelativistic_energy(m, n, dn, mass, mode, hbar);
  const OracleMode om = mode == NonrelMode::kg_limit_2v ? OracleMode::nonrel_2v : OracleMode::nonrel_v;
  const EffectiveEquation eq = build_effective(m, Sign::plus, dn, mass, om, hbar);
  if (row.closed < eq.energy_max && row.closed > eq.energy_min) {
    try {
      row.shot = shoot_near(eq, row.closed, cfg);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_sign_change) throw;
    }
  }
  if (row.shot) {
    row.rel_error = std::abs(*row.shot - row.closed) / std::max(std::abs(row.closed), 1e-12 * mass);
    row.agree = row.rel_error <= rel_tol;
  } else {
    row.rel_error = std::numeric_limits<double>::infinity();
  }
  return row;
}

PotentialModel with_alpha(const PotentialModel& m, double alpha) {
  return std::visit(
      [alpha](auto p) -> PotentialModel {
        p.alpha = alpha;
        return p;
      },
      m);
}

std::vector<ApproximationRow> approximation_error(const PotentialModel& m, int n,
                                                  const DimensionalNumbers& dn, Sign sign,
                                                  double mass, const std::vector<double>& alphas,
                                                  const ScanConfig& scan,
                                                  const IntegratorConfig& cfg, double hbar_c) {
  std::vector<ApproximationRow> rows;
  for (const double alpha : alphas) {
    const PotentialModel ma = with_alpha(m, alpha);
    std::optional<BoundState> chosen;
    for (const BoundState& b : find_bound_states(ma, n, dn, {sign}, mass, scan, hbar_c)) {
      if (decays_on_domain(b, ma) && (!chosen || b.energy > chosen->energy)) chosen = b;
    }
    if (!chosen) {
      throw Error(ErrorCode::non_normalizable,
                  "approximation_error: no decaying closed-form state at alpha = " +
                      std::to_string(alpha));
    }
    ApproximationRow row;
    row.alpha = alpha;
    row.closed = chosen->energy;
    if (dn.centrifugal_strength() == 0.0) {
      row.exact = row.closed; // the two equations coincide
    } else {
      const EffectiveEquation eq =
          build_effective(ma, sign, dn, mass, OracleMode::relativistic_exact_centrifugal, hbar_c);
      row.exact = shoot_near(eq, row.closed, cfg);
    }
    row.abs_error = std::abs(row.exact - row.closed);
    rows.push_back(row);
  }
  return rows;
}

void write_csv(const std::vector<ApproximationRow>& rows, std::ostream& os) {
  os << "alpha,E_closed,E_exact,abs_error\n";
  char line[160];
  for (const ApproximationRow& r : rows) {
    std::snprintf(line, sizeof line, "%.11e,%.11e,%.11e,%.11e\n", r.alpha, r.closed, r.exact,
                  r.abs_error);
    os << line;
  }
}

} // namespace kgspec
