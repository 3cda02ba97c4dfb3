#include "doctest.h"

#include "kgspec/error.hpp"
#include "kgspec/reference_table.hpp"
#include "kgspec/spectrum.hpp"
#include "support.hpp"

#include <cmath>

using namespace kgspec;

namespace {

const DimensionalNumbers kS = dimensional_numbers(3, 0);
const std::vector<Sign> kBoth = {Sign::plus, Sign::minus};

std::vector<double> energies(const std::vector<BoundState>& v) {
  std::vector<double> out;
  for (const auto& b : v) out.push_back(b.energy);
  return out;
}

// Plain bisection on a residual callable, for cross-checking the scanner.
template <class F>
double bisect(F f, double lo, double hi) {
  double flo = *f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = *f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::invalid_argument;
}

} // namespace

TEST_CASE("Rosen-Morse well residual vanishes at the published n = 1 energy") {
  const auto r = energy_residual(RosenMorseWell{1, -1, 1, 1}, 1, kS, Sign::plus, 4.0, 1.8137);
  REQUIRE(r.has_value());
  CHECK(std::abs(*r) < 1e-3);
}

TEST_CASE("free Hulthen residual vanishes at the free-particle levels") {
  const double alpha = 0.3, mass = 2.0;
  for (int D : {2, 3, 4}) {
    for (int l : {0, 1, 2}) {
      for (int n : {0, 1, 3}) {
        const double nu = (D + 2.0 * l - 1.0) / 2.0;
        const double x = alpha * (n + nu) / 2.0;
        if (x >= mass) continue;
        const double e = std::sqrt(mass * mass - x * x);
        const auto r = energy_residual(Hulthen{0.0, alpha}, n, dimensional_numbers(D, l), Sign::plus, mass, e);
        REQUIRE(r.has_value());
        CHECK(std::abs(*r) < 1e-12);
      }
    }
  }
}

TEST_CASE("Woods-Saxon roots solve the hand quadratic 1.01 E^2 + 0.12 E - 0.64 = 0") {
  const auto roots = find_bound_states(WoodsSaxon{0.1, 1.0}, 1, kS, {Sign::plus}, 1.0);
  REQUIRE(roots.size() == 2);
  const double disc = std::sqrt(0.12 * 0.12 + 4 * 1.01 * 0.64);
  CHECK(roots[0].energy == doctest::Approx((-0.12 + disc) / 2.02).epsilon(1e-10));
  CHECK(roots[1].energy == doctest::Approx((-0.12 - disc) / 2.02).epsilon(1e-10));
  CHECK(roots[0].energy == doctest::Approx(0.73884).epsilon(1e-5));
  CHECK(roots[1].energy == doctest::Approx(-0.85765).epsilon(1e-5));
  CHECK(code_of([] { energy_residual(WoodsSaxon{0.1, 1.0}, 0, kS, Sign::plus, 1.0, 0.5); }) ==
        ErrorCode::parameter);
}

TEST_CASE("published Rosen-Morse well rows") {
  const PotentialModel m = RosenMorseWell{1, -1, 1, 1};
  const auto n1 = energies(find_bound_states(m, 1, kS, kBoth, 4.0));
  REQUIRE(n1.size() == 4);
  const double want1[] = {1.8137, -1.9140, -3.3923, -3.9088};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(n1[i] - want1[i]) < 5e-4);
  const auto n2 = energies(find_bound_states(m, 2, kS, kBoth, 4.0));
  REQUIRE(n2.size() == 2);
  CHECK(std::abs(n2[0] + 2.2117) < 5e-4);
  CHECK(std::abs(n2[1] + 3.6791) < 5e-4);
}

TEST_CASE("every reference table entry, dashes included") {
  for (const ReferenceBlock& blk : reference_blocks()) {
    const PotentialModel m = RosenMorseWell{blk.v1, blk.v2, blk.q, blk.alpha};
    for (int n = 1; n <= 5; ++n) {
      const auto got = energies(find_bound_states(m, n, kS, kBoth, blk.mass));
      const auto& want = blk.energies[static_cast<std::size_t>(n - 1)];
      std::size_t count = 0;
      while (count < 4 && !std::isnan(want[count])) ++count;
      INFO("alpha=" << blk.alpha << " q=" << blk.q << " V1=" << blk.v1 << " n=" << n);
      REQUIRE(got.size() == count);
      for (std::size_t i = 0; i < count; ++i) CHECK(std::abs(got[i] - want[i]) < 5e-4);
    }
  }
}

TEST_CASE("the minus branch of the reference model has no real roots") {
  CHECK(find_bound_states(RosenMorseWell{1, -1, 1, 1}, 1, kS, {Sign::minus}, 4.0).empty());
}

TEST_CASE("free models have no bound states") {
  CHECK(find_bound_states(EckartType{0, 0, 0, 1, 1}, 0, kS, kBoth, 1.0).empty());
  CHECK(find_bound_states(Hulthen{0, 1}, 2, dimensional_numbers(3, 1), kBoth, 1.0).empty());
}

TEST_CASE("scanner preconditions") {
  ScanConfig coarse;
  coarse.grid_points = 32;
  CHECK(code_of([&] { find_bound_states(Hulthen{1, 1}, 0, kS, kBoth, 1.0, coarse); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([] { find_bound_states(RosenMorseWell{1, -1, 1, 1}, 0, dimensional_numbers(3, 1), kBoth, 4.0); }) ==
        ErrorCode::s_wave_only);
  CHECK(code_of([] { energy_residual(Hulthen{1, 1}, 0, kS, Sign::plus, 1.0, 1.0); }) == ErrorCode::window);
}

TEST_CASE("property: located roots re-evaluate to a small residual") {
  kgtest::Gen g(41);
  ScanConfig scan;
  for (int i = 0; i < 40; ++i) {
    const PotentialModel m =
        g.coin() ? PotentialModel{RosenMorseWell{g.uniform(0.2, 2.0), -g.uniform(0.2, 2.0), g.uniform(0.3, 1.0),
                                                 g.uniform(0.3, 1.5)}}
                 : PotentialModel{Hulthen{g.uniform(0.05, 1.0), g.uniform(0.1, 1.0)}};
    const double mass = g.uniform(1.0, 5.0);
    const int n = g.integer(1, 4);
    for (const BoundState& b : find_bound_states(m, n, kS, kBoth, mass, scan)) {
      const auto r = energy_residual(m, n, kS, b.sign, mass, b.energy);
      REQUIRE(r.has_value());
      INFO(model_name(m) << " n=" << n << " M=" << mass << " E=" << b.energy);
      // the residual is quadratic in energy; scale the tolerance by its slope
      const double slope = std::abs(*energy_residual(m, n, kS, b.sign, mass, b.energy + 1e-7 * mass) -
                                    *energy_residual(m, n, kS, b.sign, mass, b.energy - 1e-7 * mass)) /
                           (2e-7 * mass);
      CHECK(std::abs(*r) < 10.0 * scan.tolerance(mass) * std::max(1.0, slope));
    }
  }
}

TEST_CASE("property: roots are stable under grid doubling") {
  ScanConfig base, fine;
  fine.grid_points = 2 * base.grid_points;
  for (const ReferenceBlock& blk : reference_blocks()) {
    const PotentialModel m = RosenMorseWell{blk.v1, blk.v2, blk.q, blk.alpha};
    for (int n = 1; n <= 5; ++n) {
      const auto a = energies(find_bound_states(m, n, kS, kBoth, blk.mass, base));
      const auto b = energies(find_bound_states(m, n, kS, kBoth, blk.mass, fine));
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= base.tolerance(blk.mass));
    }
  }
}

TEST_CASE("property: Hulthen formula and the generic Eckart-like route give the same roots") {
  kgtest::Gen g(42);
  for (int i = 0; i < 30; ++i) {
    const Hulthen h{g.uniform(0.05, 1.5), g.uniform(0.1, 1.0)};
    const double mass = g.uniform(0.5, 3.0);
    const DimensionalNumbers dn = dimensional_numbers(g.integer(2, 5), g.integer(0, 2));
    const int n = g.integer(0, 3);
    for (const BoundState& b : find_bound_states(h, n, dn, kBoth, mass)) {
      auto generic = [&](double e) { return generic_energy_residual(h, n, dn, b.sign, mass, e); };
      const double d = 1e-6 * mass;
      const auto lo = generic(b.energy - d), hi = generic(b.energy + d);
      INFO("V0=" << h.v0 << " alpha=" << h.alpha << " M=" << mass << " E=" << b.energy);
      REQUIRE(lo.has_value());
      REQUIRE(hi.has_value());
      REQUIRE((*lo < 0) != (*hi < 0));
      CHECK(std::abs(bisect(generic, b.energy - d, b.energy + d) - b.energy) < 1e-9);
    }
  }
}

TEST_CASE("property: |p| equals sqrt(eps^2 - gamma) and the bracket magnitude") {
  kgtest::Gen g(43);
  for (int i = 0; i < 30; ++i) {
    const double v = g.uniform(0.1, 1.5), a = g.uniform(0.1, 1.0);
    const PotentialModel m = g.coin() ? PotentialModel{EckartType{0.0, v, v, 1.0, a}}
                                      : PotentialModel{RosenMorseWell{g.uniform(0.1, 1.5), -v, 1.0, a}};
    const double mass = g.uniform(1.0, 4.0);
    const int n = g.integer(0, 3);
    const DimensionalNumbers& dn = kS;
    for (const BoundState& b : find_bound_states(m, n, dn, kBoth, mass)) {
      const CouplingSet cs = couplings(m, b.energy, b.sign, mass, dn);
      const double root = std::sqrt(cs.epsilon * cs.epsilon - cs.gamma);
      const CanonicalForm c = canonical(m);
      const double k = b.energy + to_double(b.sign) * mass;
      const double x = n + b.exponents.w;
      const double bracket = 0.5 * (x - k * (c.v2 + c.v3) / (2 * c.alpha * c.alpha * x));
      INFO(model_name(m) << " E=" << b.energy);
      CHECK(std::abs(std::abs(b.exponents.p) - root) < 1e-8);
      CHECK(std::abs(std::abs(b.exponents.p) - std::abs(bracket)) < 1e-8);
      CHECK(b.exponents.jacobi_alpha == doctest::Approx(2 * b.exponents.p));
      CHECK(b.exponents.jacobi_beta == doctest::Approx(2 * b.exponents.w - 1));
    }
  }
}

// A hand check once quoted for this state put the bracket at -2.4666 and
// sqrt(eps^2 - gamma) at +2.4667. Direct evaluation gives 0.5203 for both
// magnitudes; kept as a documented expected failure.
TEST_CASE("quoted exponent magnitude 2.4667 at E = 1.8137" * doctest::should_fail()) {
  const auto roots = find_bound_states(RosenMorseWell{1, -1, 1, 1}, 1, kS, {Sign::plus}, 4.0);
  REQUIRE(!roots.empty());
  CHECK(std::abs(roots.front().exponents.p) == doctest::Approx(2.4667).epsilon(1e-4));
}

TEST_CASE("non-relativistic closed forms") {
  const double mass = 1.3, alpha = 0.4, v2 = 0.6;
  for (int n = 0; n < 3; ++n) {
    const double x = n + 1.0;
    const double want = -(alpha * alpha * x * x + mass * mass * v2 * v2 / (alpha * alpha * x * x)) / (2 * mass);
    CHECK(nonrelativistic_energy(EckartType{0, v2, v2, 1, alpha}, n, kS, mass, NonrelMode::schrodinger_v) ==
          doctest::Approx(want).epsilon(1e-13));
  }
  for (int n = 1; n < 4; ++n) {
    const double want =
        -(alpha * alpha * n * n + 4 * mass * mass * v2 * v2 / (alpha * alpha * n * n)) / (2 * mass);
    CHECK(nonrelativistic_energy(RosenMorseWell{0, v2, 1, alpha}, n, kS, mass, NonrelMode::kg_limit_2v) ==
          doctest::Approx(want).epsilon(1e-13));
  }
  CHECK(nonrelativistic_energy(WoodsSaxon{0.05, 1.0}, 1, kS, 1.0, NonrelMode::kg_limit_2v) ==
        doctest::Approx(-0.18).epsilon(1e-13));
  CHECK(code_of([] { nonrelativistic_energy(WoodsSaxon{0.05, 1.0}, 0, kS, 1.0, NonrelMode::kg_limit_2v); }) ==
        ErrorCode::parameter);
  CHECK(code_of([] { nonrelativistic_energy(TrigRosenMorse{0.5, 17, 1}, 0, kS, 1.0, NonrelMode::schrodinger_v); }) ==
        ErrorCode::unsupported);
}

TEST_CASE("trigonometric energy equation flips the sign of the level term") {
  // with both couplings zero the equation reads M^2 - E^2 + alpha^2 (n + w)^2 = 0,
  // which has no solution inside the window, while the Eckart-like sign has one
  const TrigRosenMorse t{0.0, 0.0, 0.5};
  const double e = 0.9;
  const auto r = energy_residual(t, 0, kS, Sign::plus, 1.0, e);
  REQUIRE(r.has_value());
  const double w = 1.0; // a = 0 gives w = 1 at l' = 0
  CHECK(*r == doctest::Approx(1.0 - e * e + 0.25 * w * w));
}

TEST_CASE("branch labels") {
  BoundState b;
  b.energy = 1.8137;
  CHECK(classify_branch(b) == ChargeLabel::particle);
  b.energy = -3.9088;
  CHECK(classify_branch(b) == ChargeLabel::antiparticle);
  b.energy = 0.0;
  CHECK(classify_branch(b) == ChargeLabel::particle);
}
