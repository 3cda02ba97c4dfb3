#include "doctest.h"

#include "kgspec/error.hpp"
#include "kgspec/nu_param.hpp"
#include "kgspec/potentials.hpp"
#include "support.hpp"

#include <cmath>

using namespace kgspec;
using namespace kgspec::nu;

namespace {

// Coupling-form coefficients of the Eckart-like family at q = 1.
HypergeometricCoefficients eckart_coefficients(double eps, double beta, double gamma, double lambda) {
  return to_hypergeometric({eps, beta, gamma, lambda, 1.0}, Family::eckart_like, 1.0);
}

} // namespace

TEST_CASE("zero source polynomial") {
  const NUDerived d = derive_parameters({1, 1, 1, 0, 0, 0});
  CHECK(d.c4 == 0.0);
  CHECK(d.c5 == -0.5);
  CHECK(d.c6 == 0.25);
  CHECK(d.c7 == 0.0);
  CHECK(d.c8 == 0.0);
  CHECK(d.c9 == 0.25);
  CHECK(d.c12 == 0.0);
  CHECK(d.c13 == 1.0);
  CHECK(quantization_residual({1, 1, 1, 0, 0, 0}, 0) == doctest::Approx(1.0));
  CHECK(tau_prime(d) == doctest::Approx(-3.0));
  const SolutionExponents ex = solution_exponents(d);
  CHECK(ex.phi_z == 0.0);
  CHECK(ex.phi_one_minus == 1.0);
}

TEST_CASE("Eckart-like example with eps = 1, beta = 2, gamma = lambda = 0.5") {
  const HypergeometricCoefficients h = eckart_coefficients(1.0, 2.0, 0.5, 0.5);
  const NUDerived d = derive_parameters(h);
  CHECK(d.c4 == doctest::Approx(0.0));
  CHECK(d.c5 == doctest::Approx(-0.5));
  CHECK(d.c6 == doctest::Approx(1.75));
  CHECK(d.c7 == doctest::Approx(0.0));
  CHECK(d.c8 == doctest::Approx(0.5));
  CHECK(d.c9 == doctest::Approx(2.25));
  CHECK(d.c10 == doctest::Approx(2.0 * std::sqrt(0.5)));
  CHECK(d.c11 == doctest::Approx(3.0));
  CHECK(d.c12 == doctest::Approx(std::sqrt(0.5)));
  CHECK(d.c13 == doctest::Approx(2.0));
  // c9 = c3 (c7 + c3 c8) + c6 by hand: 1 * (0 + 0.5) + 1.75
  CHECK(d.c3 * (d.c7 + d.c3 * d.c8) + d.c6 == doctest::Approx(2.25));
  CHECK(tau_prime(d) == doctest::Approx(-2.0 - 2.0 * (1.5 + std::sqrt(0.5))));
  const SolutionExponents ex = solution_exponents(d);
  CHECK(ex.rho_z == doctest::Approx(2.0 * ex.phi_z));
  CHECK(ex.rho_one_minus == doctest::Approx(2.0 * ex.phi_one_minus - 1.0));
}

TEST_CASE("negative radicands are complex-branch errors") {
  // C < 0 with c4 = 0 makes c8 negative
  try {
    derive_parameters({1, 1, 1, 0, 0, -1});
    FAIL("expected complex-branch error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::complex_branch);
  }
  try {
    derive_parameters({1, 1, 0, 0, 0, 0});
    FAIL("expected parameter error for c3 = 0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parameter);
  }
}

TEST_CASE("k branches") {
  const NUDerived d = derive_parameters(eckart_coefficients(1.0, 2.0, 0.5, 0.5));
  CHECK(d.k_minus == doctest::Approx(-(d.c7 + 2 * d.c3 * d.c8) - 2 * std::sqrt(d.c8 * d.c9)));
  CHECK(k_plus(d) == doctest::Approx(-(d.c7 + 2 * d.c3 * d.c8) + 2 * std::sqrt(d.c8 * d.c9)));
  CHECK(kSelectedKBranch == KBranch::minus);
}

TEST_CASE("residual is strictly increasing in sqrt(c8)") {
  const HypergeometricCoefficients h = eckart_coefficients(1.0, 2.0, 0.5, 0.5);
  NUDerived d = derive_parameters(h);
  for (int n = 0; n < 4; ++n) {
    double last = -INFINITY;
    for (double s = 0.0; s < 3.0; s += 0.25) {
      d.sqrt_c8 = s;
      const double r = quantization_residual(d, h, n);
      CHECK(r > last);
      last = r;
    }
  }
}

TEST_CASE("Rosen-Morse well state at 1.8137 satisfies the quantization condition") {
  // Rosen-Morse-like coefficients at the published n = 1 energy. The state
  // sits on the negative root of c8 (its z exponent is negative).
  const PotentialModel m = RosenMorseWell{1.0, -1.0, 1.0, 1.0};
  const CouplingSet cs = couplings(m, 1.8137, Sign::plus, 4.0, dimensional_numbers(3, 0));
  const HypergeometricCoefficients h = to_hypergeometric(cs, Family::rosen_morse_like, 1.0);
  CHECK(h.c2 == -1.0);
  CHECK(h.c3 == -1.0);
  CHECK(h.C == doctest::Approx(cs.epsilon * cs.epsilon - cs.gamma));
  CHECK(std::abs(quantization_residual(h, 1, RootBranch::negative)) < 1e-3);
  CHECK(std::abs(quantization_residual(h, 1, RootBranch::principal)) > 1.0);
}

TEST_CASE("property: derived identities and tau' sign") {
  kgtest::Gen g(21);
  int tested = 0;
  while (tested < 1000) {
    HypergeometricCoefficients h;
    h.c1 = g.uniform(-3, 3);
    h.c2 = g.uniform(-3, 3);
    h.c3 = g.coin() ? g.uniform(0.05, 3) : -g.uniform(0.05, 3);
    h.A = g.uniform(-5, 5);
    h.B = g.uniform(-5, 5);
    h.C = g.uniform(-5, 5);
    NUDerived d;
    try {
      d = derive_parameters(h);
    } catch (const Error&) {
      continue; // outside the real-parameter region
    }
    ++tested;
    INFO("c1=" << h.c1 << " c2=" << h.c2 << " c3=" << h.c3 << " A=" << h.A << " B=" << h.B
               << " C=" << h.C);
    using kgtest::ulps;
    using std::abs;
    const double s8 = std::sqrt(d.c8), s9 = std::sqrt(d.c9);
    // c6, c7, c8
    CHECK(ulps(d.c6, d.c5 * d.c5 + h.A, std::max(d.c5 * d.c5, abs(h.A))) <= 4);
    CHECK(ulps(d.c7, 2 * d.c4 * d.c5 - h.B, std::max(abs(2 * d.c4 * d.c5), abs(h.B))) <= 4);
    CHECK(ulps(d.c8, d.c4 * d.c4 + h.C, std::max(d.c4 * d.c4, abs(h.C))) <= 4);
    // c9
    CHECK(ulps(d.c9, h.c3 * (d.c7 + h.c3 * d.c8) + d.c6,
               std::max({abs(h.c3 * d.c7), abs(h.c3 * h.c3 * d.c8), abs(d.c6)})) <= 4);
    // k_minus
    CHECK(ulps(d.k_minus, -(d.c7 + 2 * h.c3 * d.c8) - 2 * std::sqrt(d.c8 * d.c9),
               std::max({abs(d.c7), abs(2 * h.c3 * d.c8), 2 * s8 * s9})) <= 4);
    // c10, c11
    CHECK(ulps(d.c10, h.c1 + 2 * d.c4 + 2 * s8 - 1, std::max({abs(h.c1), abs(2 * d.c4), 2 * s8, 1.0})) <= 4);
    CHECK(ulps(d.c11, 1 - h.c1 - 2 * d.c4 + (2 / h.c3) * s9,
               std::max({1.0, abs(h.c1), abs(2 * d.c4), abs(2 / h.c3 * s9)})) <= 4);
    // c12, c13
    CHECK(ulps(d.c12, d.c4 + s8, std::max(abs(d.c4), s8)) <= 4);
    CHECK(ulps(d.c13, -d.c4 + (s9 - d.c5) / h.c3, std::max({abs(d.c4), abs(s9 / h.c3), abs(d.c5 / h.c3)})) <= 4);
    if (h.c3 > 0) CHECK(tau_prime(d) < 0.0);
  }
}
