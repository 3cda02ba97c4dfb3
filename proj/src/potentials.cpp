#include "kgspec/potentials.hpp"

#include "kgspec/error.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

namespace kgspec {

namespace {

template <class... Ts> struct Overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

// The three rational shapes of the hyperbolic families in terms of
// z = exp(-2 alpha x). For x < 0 (full-line sampling) z can overflow, so the
// same quantities are rewritten through t = 1/z.
struct Shapes {
  double well = 0.0;  // z/(1 -+ qz)^2
  double step = 0.0;  // 1/(1 -+ qz)
  double ratio = 0.0; // qz/(1 -+ qz)
};

Shapes shapes(double s, double q, double alpha, double x) {
  // s = -1 for Eckart-like (1 - qz), +1 for Rosen-Morse-like (1 + qz)
  Shapes out;
  if (x >= 0.0) {
    const double z = std::exp(-2.0 * alpha * x);
    const double den = 1.0 + s * q * z;
    out.well = z / (den * den);
    out.step = 1.0 / den;
    out.ratio = q * z / den;
  } else {
    const double t = std::exp(2.0 * alpha * x);
    const double den = t + s * q;
    out.well = t / (den * den);
    out.step = t / den;
    out.ratio = q / den;
  }
  return out;
}

double canonical_value(const CanonicalForm& c, double x) {
  switch (c.family) {
  case Family::eckart_like: {
    const Shapes sh = shapes(-1.0, c.q, c.alpha, x);
    return 4.0 * c.v1 * sh.well - c.v2 * sh.step - c.v3 * sh.ratio;
  }
  case Family::rosen_morse_like: {
    const Shapes sh = shapes(+1.0, c.q, c.alpha, x);
    return 4.0 * c.v1 * sh.well - c.v2 * sh.step + c.v3 * sh.ratio;
  }
  case Family::trigonometric: {
    const double s = std::sin(c.alpha * x);
    return c.v1 / (s * s) - c.v2 * std::cos(c.alpha * x) / s;
  }
  }
  return 0.0;
}

void check_position(const CanonicalForm& c, double r, bool full_line) {
  if (!std::isfinite(r)) {
    throw Error(ErrorCode::domain, "potential: non-finite position");
  }
  if (c.family == Family::trigonometric) {
    if (r <= 0.0 || r >= std::numbers::pi / c.alpha) {
      throw Error(ErrorCode::domain,
                  "potential: x = " + std::to_string(r) + " outside (0, pi/alpha)");
    }
    return;
  }
  if (full_line && c.family == Family::rosen_morse_like) return;
  if (r <= 0.0) {
    throw Error(ErrorCode::domain, "potential: r = " + std::to_string(r) + " must be positive");
  }
  if (c.family == Family::eckart_like && c.q * std::exp(-2.0 * c.alpha * r) == 1.0) {
    throw Error(ErrorCode::domain, "potential: singular point 1 - q exp(-2 alpha r) = 0");
  }
}

} // namespace

CanonicalForm canonical(const PotentialModel& m) {
  return std::visit(
      Overloaded{
          [](const EckartType& p) {
            return CanonicalForm{Family::eckart_like, p.v1, p.v2, p.v3, p.q, p.alpha};
          },
          [](const RosenMorseType& p) {
            return CanonicalForm{Family::rosen_morse_like, p.v1, p.v2, p.v3, p.q, p.alpha};
          },
          [](const Hulthen& p) {
            return CanonicalForm{Family::eckart_like, 0.0, 0.0, p.v0, 1.0, 0.5 * p.alpha};
          },
          [](const WoodsSaxon& p) {
            return CanonicalForm{Family::rosen_morse_like, 0.0, 0.0, -p.v0, 1.0, 0.5 * p.alpha};
          },
          [](const StandardEckart& p) {
            // csch^2 = 4z/(1-z)^2, coth = 1/(1-z) + z/(1-z)
            return CanonicalForm{Family::eckart_like, p.v1, p.v2, p.v2, 1.0, p.alpha};
          },
          [](const RosenMorseWell& p) {
            // sech_q^2 = 4z/(1+qz)^2, tanh_q = 1/(1+qz) - qz/(1+qz)
            return CanonicalForm{Family::rosen_morse_like, -p.v1, -p.v2, -p.v2, p.q, p.alpha};
          },
          [](const TrigRosenMorse& p) {
            return CanonicalForm{Family::trigonometric, p.v1(), p.v2(), 0.0, 1.0, p.alpha};
          },
      },
      m);
}

void validate(const PotentialModel& m) {
  const CanonicalForm c = canonical(m);
  if (!(c.alpha > 0.0) || !std::isfinite(c.alpha)) {
    throw Error(ErrorCode::parameter, "model: alpha must be positive");
  }
  if (!(c.q > 0.0) || !std::isfinite(c.q)) {
    throw Error(ErrorCode::parameter, "model: deformation q must be positive");
  }
  if (!std::isfinite(c.v1) || !std::isfinite(c.v2) || !std::isfinite(c.v3)) {
    throw Error(ErrorCode::parameter, "model: couplings must be finite");
  }
}

const char* model_name(const PotentialModel& m) {
  return std::visit(Overloaded{
                        [](const EckartType&) { return "eckart-type"; },
                        [](const RosenMorseType&) { return "rosen-morse-type"; },
                        [](const Hulthen&) { return "hulthen"; },
                        [](const WoodsSaxon&) { return "woods-saxon"; },
                        [](const StandardEckart&) { return "eckart"; },
                        [](const RosenMorseWell&) { return "rosen-morse-well"; },
                        [](const TrigRosenMorse&) { return "trig-rosen-morse"; },
                    },
                    m);
}

bool is_free(const PotentialModel& m) {
  const CanonicalForm c = canonical(m);
  return c.v1 == 0.0 && c.v2 == 0.0 && c.v3 == 0.0;
}

double evaluate_potential(const PotentialModel& m, double r, bool full_line) {
  validate(m);
  const CanonicalForm c = canonical(m);
  check_position(c, r, full_line);
  return canonical_value(c, r);
}

DimensionalNumbers dimensional_numbers(int D, int l) {
  if (D < 1 || l < 0) {
    throw Error(ErrorCode::invalid_argument, "dimensional_numbers: need D >= 1 and l >= 0");
  }
  DimensionalNumbers dn;
  dn.D = D;
  dn.l = l;
  dn.script_m = D + 2 * l;
  dn.l_prime = 0.5 * (dn.script_m - 3);
  return dn;
}

double centrifugal_approximation(const DimensionalNumbers& dn, double q, double alpha, double r) {
  if (r <= 0.0) {
    throw Error(ErrorCode::domain, "centrifugal_approximation: r must be positive");
  }
  const double strength = dn.centrifugal_strength();
  if (strength == 0.0) return 0.0;
  const double z = std::exp(-2.0 * alpha * r);
  const double den = 1.0 - q * z;
  if (den == 0.0) {
    throw Error(ErrorCode::domain, "centrifugal_approximation: singular point q exp(-2 alpha r) = 1");
  }
  return 4.0 * alpha * alpha * strength * z / (den * den);
}

namespace {

void require_s_wave(const CanonicalForm& c, const DimensionalNumbers& dn) {
  if (c.family == Family::rosen_morse_like && (dn.l != 0 || dn.D != 3)) {
    throw Error(ErrorCode::s_wave_only,
                "Rosen-Morse family is solved for s-waves in three dimensions only");
  }
}

} // namespace

CouplingSet couplings(const PotentialModel& m, double energy, Sign sign, double mass,
                      const DimensionalNumbers& dn, double hbar_c) {
  validate(m);
  const CanonicalForm c = canonical(m);
  if (c.family == Family::trigonometric) {
    throw Error(ErrorCode::unsupported, "couplings: trigonometric model has no hyperbolic coupling set");
  }
  require_s_wave(c, dn);
  if (!(mass > 0.0) || !(hbar_c > 0.0)) {
    throw Error(ErrorCode::parameter, "couplings: mass and hbar_c must be positive");
  }
  if (std::abs(energy) > mass) {
    throw Error(ErrorCode::window, "couplings: |E| exceeds the rest energy");
  }
  const double k = energy + to_double(sign) * mass;
  CouplingSet cs;
  cs.scale = 2.0 * hbar_c * c.alpha;
  const double q2 = cs.scale * cs.scale;
  cs.epsilon = std::sqrt((mass - energy) * (mass + energy)) / cs.scale;
  cs.beta = 8.0 * k * c.v1 / q2;
  if (c.family == Family::eckart_like) cs.beta += dn.centrifugal_strength();
  cs.gamma = 2.0 * k * c.v2 / q2;
  cs.lambda = 2.0 * k * c.v3 / q2;
  return cs;
}

CouplingSet nonrelativistic_couplings(const PotentialModel& m, double energy, double mass,
                                      const DimensionalNumbers& dn, double potential_factor,
                                      double hbar) {
  validate(m);
  const CanonicalForm c = canonical(m);
  if (c.family == Family::trigonometric) {
    throw Error(ErrorCode::unsupported, "nonrelativistic_couplings: trigonometric model");
  }
  require_s_wave(c, dn);
  if (energy > 0.0) {
    throw Error(ErrorCode::window, "nonrelativistic_couplings: bound energies are non-positive");
  }
  const double weight = mass * potential_factor;
  CouplingSet cs;
  cs.scale = 2.0 * hbar * c.alpha;
  const double t2 = cs.scale * cs.scale;
  cs.epsilon = std::sqrt(-2.0 * mass * energy) / cs.scale;
  cs.beta = 8.0 * weight * c.v1 / t2;
  if (c.family == Family::eckart_like) cs.beta += dn.centrifugal_strength();
  cs.gamma = 2.0 * weight * c.v2 / t2;
  cs.lambda = 2.0 * weight * c.v3 / t2;
  return cs;
}

nu::HypergeometricCoefficients to_hypergeometric(const CouplingSet& cs, Family family, double q) {
  const double e2 = cs.epsilon * cs.epsilon;
  nu::HypergeometricCoefficients h;
  h.c1 = 1.0;
  h.A = q * q * (e2 + cs.lambda);
  h.C = e2 - cs.gamma;
  switch (family) {
  case Family::eckart_like:
    h.c2 = h.c3 = q;
    h.B = q * (2.0 * e2 + cs.lambda - cs.gamma) - cs.beta;
    break;
  case Family::rosen_morse_like:
    h.c2 = h.c3 = -q;
    h.B = -q * (2.0 * e2 + cs.lambda - cs.gamma) - cs.beta;
    break;
  case Family::trigonometric:
    throw Error(ErrorCode::unsupported, "to_hypergeometric: trigonometric model");
  }
  return h;
}

double trm_small_x_expansion(const TrigRosenMorse& m, double x, bool linear_correction) {
  const double v1 = m.v1();
  const double v2 = m.v2();
  double value = 0.0;
  if (x > 0.0) {
    const double ax = m.alpha * x;
    value = -v2 / ax + v1 / (ax * ax);
  } else if (!(linear_correction && x == 0.0)) {
    throw Error(ErrorCode::domain, "trm_small_x_expansion: x must be positive");
  }
  if (linear_correction) value += v1 / 3.0 + v2 * x / 3.0;
  return value;
}

namespace {

double centrifugal_term(const CanonicalForm& c, const DimensionalNumbers& dn, double r,
                        CentrifugalTerm centrifugal) {
  const double strength = dn.centrifugal_strength();
  if (strength == 0.0 || centrifugal == CentrifugalTerm::none) return 0.0;
  if (centrifugal == CentrifugalTerm::exact) return strength / (r * r);
  if (c.family == Family::trigonometric) {
    const double s = std::sin(c.alpha * r);
    return c.alpha * c.alpha * strength / (s * s);
  }
  return centrifugal_approximation(dn, c.q, c.alpha, r);
}

} // namespace

double kg_coefficient(const PotentialModel& m, Sign sign, const DimensionalNumbers& dn, double mass,
                      double energy, double r, CentrifugalTerm centrifugal, double hbar_c,
                      bool full_line) {
  const CanonicalForm c = canonical(m);
  check_position(c, r, full_line);
  const double v = canonical_value(c, r);
  const double k = energy + to_double(sign) * mass;
  return ((energy - mass) * (energy + mass) - 2.0 * k * v) / (hbar_c * hbar_c) -
         centrifugal_term(c, dn, r, centrifugal);
}

double schrodinger_coefficient(const PotentialModel& m, const DimensionalNumbers& dn, double mass,
                               double energy, double r, double potential_factor,
                               CentrifugalTerm centrifugal, double hbar, bool full_line) {
  const CanonicalForm c = canonical(m);
  check_position(c, r, full_line);
  const double v = canonical_value(c, r);
  return 2.0 * mass * (energy - potential_factor * v) / (hbar * hbar) -
         centrifugal_term(c, dn, r, centrifugal);
}

} // namespace kgspec
