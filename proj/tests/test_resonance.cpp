#include <doctest.h>

#include <cmath>
#include <numbers>

#include "confined_atom/airy.hpp"
#include "confined_atom/bound_state.hpp"
#include "confined_atom/dalgarno_lewis.hpp"
#include "confined_atom/resonance.hpp"

using namespace confined_atom;

TEST_CASE("scaled variable") {
  const double F = 0.05;
  const cplx eps{-0.4, 0.0};
  const double c = std::cbrt(2.0 / (F * F));
  CHECK(std::abs(scaled_variable(-eps.real() / F, eps, F)) < 1e-14);
  CHECK(scaled_variable(0.0, eps, F).real() == doctest::Approx(c * eps.real()).epsilon(1e-15));
  const double a = 3.0;
  const cplx diff = scaled_variable(-a, eps, F) - scaled_variable(0.0, eps, F);
  CHECK(diff.real() == doctest::Approx(-std::cbrt(2.0 * F) * a).epsilon(1e-14));
  CHECK_THROWS_AS(scaled_variable(0.0, eps, 0.0), std::invalid_argument);
}

TEST_CASE("Wronskian entering the matching condition") {
  const auto cfg = AtomConfig::near_wall(1.0, 5.0);
  const auto r = solve_resonance(cfg, 0.1);
  const cplx alpha = scaled_variable(0.0, r.energy, 0.1);
  const auto p = airy_eval(-alpha);
  // derivatives taken with respect to alpha
  const cplx dai = -p.ai_prime, dbi = -p.bi_prime;
  CHECK(std::abs(dai * p.bi - dbi * p.ai - std::numbers::inv_pi) < 1e-12);
}

TEST_CASE("converged root zeroes the determinant") {
  const auto cfg = AtomConfig::near_wall(1.0, 5.0);
  const auto r = solve_resonance(cfg, 0.1);
  CHECK(r.converged);
  CHECK(std::abs(determinant(r.energy, cfg, 0.1)) < 1e-9);
  CHECK(std::abs(reduced_determinant(r.energy, cfg, 0.1)) < 1e-12);

  for (double F : {0.02, 0.05, 0.1}) {
    const auto s = solve_resonance(AtomConfig::near_wall(10.0, 0.2), F);
    CHECK(s.converged);
    CHECK(s.residual < 1e-9);
  }
  const auto iso = solve_resonance(AtomConfig::isolated(1.0), 0.1);
  CHECK(std::abs(determinant(iso.energy, AtomConfig::isolated(1.0), 0.1)) < 1e-12);
}

// The raw determinant carries Bi at the wall, which grows without bound as
// F -> 0; the reduced form divides it out.
TEST_CASE("matching condition at the unperturbed level vanishes as F -> 0") {
  const auto cfg = AtomConfig::near_wall(1.0, 5.0);
  const auto bs = solve_bound_state(cfg);
  double previous = INFINITY;
  for (double F : {1e-2, 1e-3, 1e-4}) {
    const double d = std::abs(reduced_determinant(bs.energy, cfg, F));
    CHECK(d < previous);
    previous = d;
  }
  CHECK(previous < 1e-8);

  const auto iso = AtomConfig::isolated(1.0);
  const auto bi = solve_bound_state(iso);
  CHECK(std::abs(determinant(bi.energy, iso, 1e-3)) < std::abs(determinant(bi.energy, iso, 1e-2)));
}

TEST_CASE("weak-field continuation reaches the bound level") {
  const auto cfg = AtomConfig::near_wall(1.0, 5.0);
  const auto bs = solve_bound_state(cfg);
  double previous = INFINITY;
  for (double F : {0.05, 0.01, 0.002}) {
    const auto r = solve_resonance(cfg, F);
    const double gap = std::abs(r.energy.real() - bs.energy);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous < 1e-4);
}

TEST_CASE("isolated atom resonance matches the weak-field formulas") {
  const auto cfg = AtomConfig::isolated(1.0);
  const auto bs = solve_bound_state(cfg);
  const auto r = solve_resonance(cfg, 0.05);
  CHECK(r.stark_shift == doctest::Approx(asymptotic_stark_shift(bs, 0.05)).epsilon(0.05));
  CHECK(std::abs(r.log_gamma - asymptotic_log_ionization_rate(bs, cfg, 0.05)) < std::log(1.2));
}

// With the wall the level carries a permanent dipole <x> > 0, so the shift is
// -F<x> - alpha F^2/2 and the pure F^2 law without a linear term does not
// describe it. Kept as stated; see the next case for the comparison that holds.
TEST_CASE("Z=10, a=0.2, F=0.05: shift within 10% of -5F^2/(8k^4)" * doctest::may_fail()) {
  const auto cfg = AtomConfig::near_wall(10.0, 0.2);
  const auto bs = solve_bound_state(cfg);
  const auto r = solve_resonance(cfg, 0.05);
  CHECK(r.stark_shift == doctest::Approx(asymptotic_stark_shift(bs, 0.05)).epsilon(0.1));
}

TEST_CASE("Z=10, a=0.2: shift against the perturbative energy through second order") {
  const auto cfg = AtomConfig::near_wall(10.0, 0.2);
  const auto bs = solve_bound_state(cfg);
  for (double F : {0.02, 0.05}) {
    const auto r = solve_resonance(cfg, F);
    CHECK(r.stark_shift == doctest::Approx(stark_shift_through_second_order(bs, cfg, F)).epsilon(1e-3));
  }
}

TEST_CASE("Z=10, a=0.2, F=0.05: width within a factor of two of the tunnelling formula") {
  const auto cfg = AtomConfig::near_wall(10.0, 0.2);
  const auto bs = solve_bound_state(cfg);
  const auto r = solve_resonance(cfg, 0.05);
  // the width itself underflows a double here
  CHECK(r.gamma == 0.0);
  CHECK(std::abs(r.log_gamma - asymptotic_log_ionization_rate(bs, cfg, 0.05)) < std::log(2.0));
  CHECK(r.within_validity);
}

TEST_CASE("Z=1, a=5: width within 20% of the tunnelling formula") {
  const auto cfg = AtomConfig::near_wall(1.0, 5.0);
  const auto bs = solve_bound_state(cfg);
  for (double F : {0.02, 0.05}) {
    const auto r = solve_resonance(cfg, F);
    CHECK(r.gamma == doctest::Approx(asymptotic_ionization_rate(bs, cfg, F)).epsilon(0.2));
    CHECK(r.log_gamma == doctest::Approx(std::log(r.gamma)).epsilon(1e-9));
  }
}

TEST_CASE("validity flag") {
  const auto cfg = AtomConfig::isolated(1.0);
  CHECK(solve_resonance(cfg, 0.2).within_validity);
  CHECK_FALSE(solve_resonance(cfg, 0.35).within_validity);
}

TEST_CASE("weak-field shift formula") {
  const BoundState unit{1.0, -0.5, 1.0};
  CHECK(asymptotic_stark_shift(unit, 0.0) == 0.0);
  CHECK(asymptotic_stark_shift(unit, 0.1) == doctest::Approx(-0.00625).epsilon(1e-15));
  CHECK(asymptotic_stark_shift(unit, 0.2) == doctest::Approx(4.0 * asymptotic_stark_shift(unit, 0.1)));
  CHECK(asymptotic_polarizability(unit) == 1.25);
}

TEST_CASE("tunnelling rate formula") {
  const BoundState unit{1.0, -0.5, 1.0};
  const auto one = AtomConfig::isolated(1.0);
  const auto two = AtomConfig::isolated(2.0);
  CHECK(asymptotic_ionization_rate(unit, one, 0.0) == 0.0);
  CHECK(asymptotic_ionization_rate(unit, one, 0.1) == doctest::Approx(1.2726338013398e-3).epsilon(1e-12));
  CHECK(asymptotic_ionization_rate(unit, two, 0.1) ==
        doctest::Approx(0.5 * asymptotic_ionization_rate(unit, one, 0.1)).epsilon(1e-15));
  CHECK(std::isinf(asymptotic_log_ionization_rate(unit, one, 0.0)));
  // faster than any power: Gamma / F^n -> 0
  for (int n : {1, 4, 10}) CHECK(asymptotic_ionization_rate(unit, one, 0.001) / std::pow(0.001, n) < 1e-200);
}
