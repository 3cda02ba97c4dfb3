#include "doctest.h"

#include "kgspec/error.hpp"
#include "kgspec/specfun.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace kgspec;
using namespace kgspec::specfun;

TEST_CASE("gamma at known points") {
  CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_real(0.5) == doctest::Approx(1.772453850906).epsilon(1e-12));
  CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(gamma_real(-0.5) == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("gamma matches the library gamma over [-30, 30]") {
  kgtest::Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    double x = g.uniform(-30.0, 30.0);
    if (std::abs(x - std::round(x)) < 1e-3 && x <= 0.0) continue;
    INFO("x = " << x);
    CHECK(kgtest::rel_diff(gamma_real(x), std::tgamma(x)) < 1e-12);
  }
}

TEST_CASE("gamma poles raise a pole error") {
  for (double x : {0.0, -1.0, -7.0, -1.0 + 1e-15}) {
    try {
      gamma_real(x);
      FAIL("expected a pole error at " << x);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::pole);
    }
  }
}

TEST_CASE("property: gamma recurrence on [0.1, 20]") {
  kgtest::Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    const double x = g.uniform(0.1, 20.0);
    INFO("x = " << x);
    CHECK(kgtest::rel_diff(gamma_real(x + 1.0), x * gamma_real(x)) < 1e-12);
  }
}

TEST_CASE("jacobi examples") {
  CHECK(jacobi_poly({0, 2.7, -0.3}, 0.9) == 1.0);
  CHECK(jacobi_poly({1, 2.0, 3.0}, 0.5) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(jacobi_poly({2, 0.0, 0.0}, 0.6) == doctest::Approx(0.04).epsilon(1e-13));
  // P_n(1) = binom(n + alpha, n)
  CHECK(jacobi_poly({4, 1.5, -0.7}, 1.0) == doctest::Approx(binomial(5.5, 4)).epsilon(1e-13));
}

TEST_CASE("jacobi with alpha + beta at a recurrence singularity") {
  // alpha + beta = -2 makes the textbook recurrence divide by zero at n = 1
  const double direct = jacobi_poly({3, -0.5, -1.5}, 0.3);
  double sum = 0.0;
  for (int s = 0; s <= 3; ++s) {
    sum += binomial(3 - 0.5, 3 - s) * binomial(3 - 1.5, s) * std::pow(0.5 * (0.3 - 1.0), s) *
           std::pow(0.5 * (0.3 + 1.0), 3 - s);
  }
  CHECK(direct == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("hyp2f1 examples") {
  CHECK(hyp2f1_terminating(3, 1.1, 2.2, 0.0) == 1.0);
  CHECK(hyp2f1_terminating(0, 4.0, 1.5, 0.7) == 1.0);
  CHECK(std::abs(hyp2f1_terminating(2, 3.0, 2.0, 0.5)) < 1e-15);
}

TEST_CASE("hyp2f1 with a vanishing retained Pochhammer is a parameter error") {
  try {
    hyp2f1_terminating(3, 1.0, -1.0, 0.5);
    FAIL("expected a parameter error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parameter);
  }
}

TEST_CASE("property: jacobi equals binomial prefactor times 2F1") {
  kgtest::Gen g(13);
  for (int i = 0; i < 1000; ++i) {
    const int n = g.integer(0, 10);
    const double a = g.uniform(-0.9, 5.0);
    const double b = g.uniform(-0.9, 5.0);
    const double x = g.uniform(0.0, 1.0);
    const double lhs = jacobi_poly({n, a, b}, 1.0 - 2.0 * x);
    const double rhs = binomial(n + a, n) * hyp2f1_terminating(n, n + a + b + 1.0, a + 1.0, x);
    INFO("n=" << n << " a=" << a << " b=" << b << " x=" << x);
    // absolute floor for values that cancel to near zero
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("property: jacobi symmetry") {
  kgtest::Gen g(14);
  for (int i = 0; i < 1000; ++i) {
    const int n = g.integer(0, 10);
    const double a = g.uniform(-0.9, 5.0);
    const double b = g.uniform(-0.9, 5.0);
    const double x = g.uniform(-1.0, 1.0);
    const double lhs = jacobi_poly({n, a, b}, -x);
    const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_poly({n, b, a}, x);
    INFO("n=" << n << " a=" << a << " b=" << b << " x=" << x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("hyp2f1 at zero argument is exactly one") {
  kgtest::Gen g(15);
  for (int i = 0; i < 200; ++i) {
    CHECK(hyp2f1_terminating(g.integer(0, 10), g.uniform(-5, 5), g.uniform(0.1, 5), 0.0) == 1.0);
  }
}

TEST_CASE("classical range flag") {
  CHECK(JacobiParams{2, 0.5, 0.5}.classical_range());
  CHECK_FALSE(JacobiParams{2, -1.5, 0.5}.classical_range());
}
