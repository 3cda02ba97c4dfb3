#include "kgspec/wavefn.hpp"

#include "kgspec/error.hpp"
#include "kgspec/specfun.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace kgspec {

namespace {

struct Signed {
  double sign = 0.0; // -1, 0 or +1
  double log_abs = 0.0;
};

Signed to_signed(double v) {
  if (v == 0.0) return {0.0, 0.0};
  return {std::copysign(1.0, v), std::log(std::abs(v))};
}

// P_n^{(a,b)}(x) as sign and log magnitude. Far out on the line x = 1 + 2qz
// grows like exp(2 alpha |x|), so the recurrence is run on P_k / x^k.
Signed log_jacobi(int n, double a, double b, double x) {
  if (n == 0) return {1.0, 0.0};
  if (std::abs(x) < 1e8) return to_signed(specfun::jacobi_poly({n, a, b}, x));
  const double inv = 1.0 / x;
  double prev = 1.0;
  double curr = 0.5 * (a - b) * inv + 0.5 * (a + b + 2.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double denom = 2.0 * k * (k + a + b) * (s - 2.0);
    if (denom == 0.0) return to_signed(specfun::jacobi_poly({n, a, b}, x));
    const double c1 = (s - 1.0) * (s * (s - 2.0) + (a * a - b * b) * inv);
    const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c1 * curr - c2 * prev * inv * inv) / denom;
    prev = curr;
    curr = next;
  }
  Signed out = to_signed(curr);
  out.log_abs += n * std::log(std::abs(x));
  if (x < 0.0 && n % 2 != 0) out.sign = -out.sign;
  return out;
}

struct Prefactor {
  double log_z = 0.0;    // -2 alpha r
  double log_base = 0.0; // log(1 -+ qz)
  double qz = 0.0;       // may be inf far on the negative side
  double s = 0.0;        // -1 Eckart-like, +1 Rosen-Morse-like
};

Prefactor prefactor(const CanonicalForm& c, double r, bool full_line) {
  if (c.family == Family::trigonometric) {
    throw Error(ErrorCode::unsupported, "trigonometric closed form is complex-valued");
  }
  if (!std::isfinite(r)) {
    throw Error(ErrorCode::domain, "radial_u: non-finite r");
  }
  const bool line = full_line && c.family == Family::rosen_morse_like;
  if (!line && r <= 0.0) {
    throw Error(ErrorCode::domain, "radial_u: r must be positive");
  }
  Prefactor pf;
  pf.log_z = -2.0 * c.alpha * r;
  const double log_qz = pf.log_z + std::log(c.q);
  pf.qz = std::exp(log_qz);
  if (c.family == Family::eckart_like) {
    pf.s = -1.0;
    if (log_qz >= 0.0) {
      throw Error(ErrorCode::domain, "radial_u: at or inside the singular point q exp(-2 alpha r) = 1");
    }
    pf.log_base = std::log(-std::expm1(log_qz)); // accurate as qz -> 1
  } else {
    pf.s = 1.0;
    pf.log_base = log_qz < 30.0 ? std::log1p(pf.qz) : log_qz + std::log1p(std::exp(-log_qz));
  }
  return pf;
}

double compose(const Signed& poly, double log_rest) {
  if (poly.sign == 0.0) return 0.0;
  return poly.sign * std::exp(poly.log_abs + log_rest);
}

} // namespace

double radial_u(const BoundState& b, const PotentialModel& m, double r, bool full_line) {
  const CanonicalForm c = canonical(m);
  const Prefactor pf = prefactor(c, r, full_line);
  const WaveExponents& ex = b.exponents;
  const double arg = 1.0 + 2.0 * pf.s * pf.qz;
  const Signed poly = log_jacobi(b.n, ex.jacobi_alpha, ex.jacobi_beta, arg);
  return compose(poly, ex.p * pf.log_z + ex.w * pf.log_base);
}

double radial_u_hypergeometric(const BoundState& b, const PotentialModel& m, double r,
                               bool full_line) {
  const CanonicalForm c = canonical(m);
  const Prefactor pf = prefactor(c, r, full_line);
  const WaveExponents& ex = b.exponents;
  const double series = specfun::binomial(b.n + 2.0 * ex.p, b.n) *
                        specfun::hyp2f1_terminating(b.n, b.n + 2.0 * ex.p + 2.0 * ex.w,
                                                    2.0 * ex.p + 1.0, -pf.s * pf.qz);
  return compose(to_signed(series), ex.p * pf.log_z + ex.w * pf.log_base);
}

double radial_R(const BoundState& b, const PotentialModel& m, double r, int D,
                double normalization) {
  const double u = radial_u(b, m, r);
  if (D == 1) return normalization * u;
  return normalization * std::pow(r, -0.5 * (D - 1)) * u;
}

namespace {

struct Extent {
  double lo = 0.0;
  double hi = 0.0;
  bool full_line = false;
};

void require_decay(const BoundState& b, const CanonicalForm& c, bool full_line) {
  if (c.family == Family::trigonometric) {
    throw Error(ErrorCode::unsupported, "normalization of the trigonometric model is not supported");
  }
  if (full_line) {
    if (c.family != Family::rosen_morse_like) {
      throw Error(ErrorCode::unsupported, "full-line sampling needs a Rosen-Morse-family model");
    }
    if (!b.flags.full_line_decay) {
      throw Error(ErrorCode::non_normalizable,
                  "state does not decay at both ends of the line (p = " +
                      std::to_string(b.exponents.p) + ")");
    }
    return;
  }
  if (!b.flags.p_positive) {
    throw Error(ErrorCode::non_normalizable,
                "state grows at large r (p = " + std::to_string(b.exponents.p) + ")");
  }
  if (c.family == Family::eckart_like && !b.flags.w_positive) {
    throw Error(ErrorCode::non_normalizable,
                "state does not vanish at the origin (w = " + std::to_string(b.exponents.w) + ")");
  }
}

using Gauss = boost::math::quadrature::gauss<double, 20>;

double integrate_uniform(const auto& f, double a, double b, int panels) {
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    sum += Gauss::integrate(f, a + i * width, a + (i + 1) * width);
  }
  return sum;
}

// u^2 over the domain together with the extent that meets the tail bound.
std::pair<double, Extent> norm_integral(const BoundState& b, const PotentialModel& m,
                                        const GridConfig& cfg) {
  const CanonicalForm c = canonical(m);
  const bool line = cfg.full_line;
  require_decay(b, c, line);
  const double alpha = c.alpha;
  const double p = b.exponents.p;
  auto f = [&](double r) {
    const double u = radial_u(b, m, r, line);
    return u * u;
  };
  const double right_rate = 4.0 * alpha * p;

  Extent ext;
  ext.full_line = line;
  if (!line) {
    // geometric panels toward the origin, where u may behave like r^w
    const double r1 = 1.0 / alpha;
    double inner = 0.0;
    double hi = r1;
    for (int k = 0; k < 60; ++k) {
      inner += Gauss::integrate(f, 0.5 * hi, hi);
      hi *= 0.5;
    }
    double outer = cfg.r_max > 0.0 ? cfg.r_max : std::max(10.0 / alpha, 2.0 * r1);
    for (int it = 0; it < 200; ++it) {
      const double total = inner + integrate_uniform(f, r1, outer, cfg.panels);
      const double tail = f(outer) / right_rate;
      if (cfg.r_max > 0.0 || tail < cfg.tail_tolerance * total) {
        ext.lo = 0.0;
        ext.hi = outer;
        return {total, ext};
      }
      outer += 10.0 / right_rate + 2.0 / alpha;
    }
    throw Error(ErrorCode::non_normalizable, "tail bound not reached");
  }

  const double left_rate = 4.0 * alpha * std::abs(p + b.exponents.w + b.n);
  double lo = -10.0 / alpha;
  double hi = cfg.r_max > 0.0 ? cfg.r_max : 10.0 / alpha;
  for (int it = 0; it < 400; ++it) {
    const double total = integrate_uniform(f, lo, hi, cfg.panels);
    const bool left_ok = f(lo) / left_rate < cfg.tail_tolerance * total;
    const bool right_ok = cfg.r_max > 0.0 || f(hi) / right_rate < cfg.tail_tolerance * total;
    if (left_ok && right_ok) {
      ext.lo = lo;
      ext.hi = hi;
      return {total, ext};
    }
    if (!left_ok) lo -= 10.0 / left_rate + 2.0 / alpha;
    if (!right_ok) hi += 10.0 / right_rate + 2.0 / alpha;
  }
  throw Error(ErrorCode::non_normalizable, "tail bound not reached");
}

} // namespace

double normalization_constant(const BoundState& b, const PotentialModel& m, const GridConfig& cfg) {
  const double integral = norm_integral(b, m, cfg).first;
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw Error(ErrorCode::non_normalizable, "norm integral is not finite and positive");
  }
  return 1.0 / std::sqrt(integral);
}

RadialSample normalize(const BoundState& b, const PotentialModel& m, const GridConfig& cfg) {
  if (cfg.samples < 2 || cfg.panels < 1) {
    throw Error(ErrorCode::invalid_argument, "normalize: need at least 2 samples and 1 panel");
  }
  const auto [integral, ext] = norm_integral(b, m, cfg);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw Error(ErrorCode::non_normalizable, "norm integral is not finite and positive");
  }
  RadialSample s;
  s.D = b.D;
  s.full_line = ext.full_line;
  s.normalization_constant = 1.0 / std::sqrt(integral);
  const int count = cfg.samples;
  s.grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (ext.full_line) {
      s.grid.push_back(ext.lo + (ext.hi - ext.lo) * i / (count - 1));
    } else {
      s.grid.push_back(ext.hi * (i + 1) / count);
    }
  }
  for (const double r : s.grid) {
    const double u = s.normalization_constant * radial_u(b, m, r, ext.full_line);
    s.u_values.push_back(u);
    s.R_values.push_back(ext.full_line || b.D == 1 ? u : std::pow(r, -0.5 * (b.D - 1)) * u);
  }
  s.node_count = count_nodes(s);
  s.max_ode_residual = ode_residual(b, m, s.grid);
  return s;
}

RadialSample sample(const BoundState& b, const PotentialModel& m, const GridConfig& cfg) {
  if (cfg.samples < 3) throw Error(ErrorCode::invalid_argument, "sample: need at least 3 samples");
  const CanonicalForm c = canonical(m);
  RadialSample s;
  s.D = b.D;
  s.full_line = cfg.full_line && c.family == Family::rosen_morse_like;
  const double extent = cfg.r_max > 0.0 ? cfg.r_max : 20.0 / c.alpha;
  for (int i = 0; i < cfg.samples; ++i) {
    s.grid.push_back(s.full_line ? -extent + 2.0 * extent * i / (cfg.samples - 1)
                                 : extent * (i + 1) / cfg.samples);
  }
  for (const double r : s.grid) {
    const double u = radial_u(b, m, r, s.full_line);
    s.u_values.push_back(u);
    s.R_values.push_back(s.full_line || b.D == 1 ? u : std::pow(r, -0.5 * (b.D - 1)) * u);
  }
  s.node_count = count_nodes(s);
  s.max_ode_residual = ode_residual(b, m, s.grid);
  return s;
}

int count_nodes(const RadialSample& s) {
  double peak = 0.0;
  for (const double u : s.u_values) peak = std::max(peak, std::abs(u));
  const double band = 1e-12 * peak;
  int nodes = 0;
  double last = 0.0;
  for (const double u : s.u_values) {
    if (std::abs(u) <= band) continue;
    if (last != 0.0 && (u > 0.0) != (last > 0.0)) ++nodes;
    last = u;
  }
  return nodes;
}

double ode_residual(const BoundState& b, const PotentialModel& m, const std::vector<double>& grid) {
  const CanonicalForm c = canonical(m);
  if (grid.size() < 3) return 0.0;
  const bool line = c.family == Family::rosen_morse_like &&
                    *std::min_element(grid.begin(), grid.end()) <= 0.0;
  const DimensionalNumbers dn = dimensional_numbers(b.D, b.l);
  const double h0 = 1e-3 / c.alpha;

  // Normalized by the largest |u''| + |Q u| on the grid: at a turning point
  // that is also near a node both terms vanish and a pointwise ratio only
  // measures cancellation.
  std::vector<double> defects;
  double scale = 0.0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double r = grid[i];
    const double h = line ? h0 : std::min(h0, 0.25 * r);
    auto u = [&](double x) { return radial_u(b, m, x, line); };
    const double u0 = u(r);
    auto second = [&](double step) { return (u(r + step) - 2.0 * u0 + u(r - step)) / (step * step); };
    const double coarse = second(h);
    const double fine = second(0.5 * h);
    const double upp = fine + (fine - coarse) / 3.0;
    const double q = kg_coefficient(m, b.sign, dn, b.mass, b.energy, r, CentrifugalTerm::approximate,
                                    b.hbar_c, line);
    defects.push_back(std::abs(upp + q * u0));
    scale = std::max(scale, std::abs(q * u0) + std::abs(upp));
  }
  if (scale == 0.0) return 0.0;
  return *std::max_element(defects.begin(), defects.end()) / scale;
}

std::vector<double> residual_grid(const PotentialModel& m, bool full_line) {
  const double alpha = canonical(m).alpha;
  std::vector<double> grid;
  const double lo = full_line ? -10.0 / alpha : 0.05 / alpha;
  const double hi = 10.0 / alpha;
  for (int i = 0; i < 200; ++i) grid.push_back(lo + (hi - lo) * i / 199.0);
  return grid;
}

void write_csv(const RadialSample& s, std::ostream& os) {
  os << "r,u,R\n";
  char line[128];
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    std::snprintf(line, sizeof line, "%.11e,%.11e,%.11e\n", s.grid[i], s.u_values[i],
                  s.R_values[i]);
    os << line;
  }
}

} // namespace kgspec
