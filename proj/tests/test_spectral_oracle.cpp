#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "confined_atom/bound_state.hpp"
#include "confined_atom/dalgarno_lewis.hpp"
#include "confined_atom/fowler.hpp"
#include "confined_atom/spectral_oracle.hpp"
#include "confined_atom/tridiagonal.hpp"

using namespace confined_atom;

TEST_CASE("tridiagonal QL on the discrete Laplacian") {
  const std::size_t n = 50;
  std::vector<double> d(n, 2.0), e(n - 1, -1.0), w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 1.0;
  const auto d0 = d;
  tridiagonal_ql(d, e, w, n);
  auto sorted = d;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < n; ++j)
    CHECK(sorted[j] == doctest::Approx(2.0 - 2.0 * std::cos((j + 1.0) * std::numbers::pi / (n + 1.0))).scale(1.0).epsilon(1e-13));
  CHECK(lowest_eigenvalue(d0, e) == doctest::Approx(sorted[0]).scale(1.0).epsilon(1e-13));

  // eigenvector of d[m]: row m of w holds its components
  for (std::size_t m = 0; m < n; m += 7) {
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double hv = 2.0 * w[m * n + i];
      if (i > 0) hv -= w[m * n + i - 1];
      if (i + 1 < n) hv -= w[m * n + i + 1];
      res = std::max(res, std::abs(hv - d[m] * w[m * n + i]));
    }
    CHECK(res < 1e-12);
  }

  const auto v = inverse_iteration(d0, e, sorted[0]);
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) dot += v[i] * std::sin((i + 1.0) * std::numbers::pi / (n + 1.0));
  CHECK(std::abs(dot) == doctest::Approx(std::sqrt((n + 1.0) / 2.0)).epsilon(1e-12));
}

TEST_CASE("Hamiltonian layout") {
  const auto h = build_hamiltonian(AtomConfig::near_wall(1.0, 2.0), 6.0, 79);
  CHECK(h.grid.spacing == doctest::Approx(0.1));
  CHECK(h.grid.x(h.grid.origin) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  const auto m = h.dense();
  const std::size_t n = h.grid.points;
  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) symmetric = symmetric && m[i * n + j] == m[j * n + i];
  CHECK(symmetric);
  CHECK(m[h.grid.origin * n + h.grid.origin] == doctest::Approx(1.0 / 0.01 - 1.0 / 0.1));

  CHECK_THROWS_AS(build_hamiltonian(AtomConfig::near_wall(1.0, 2.0), 6.05, 79), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(AtomConfig::near_wall(1.0, 2.0), -1.0, 79), std::invalid_argument);

  const double L = snap_box_length(3.0, 40.0, 1000);
  CHECK(L >= 40.0);
  CHECK_NOTHROW(build_hamiltonian(AtomConfig::near_wall(1.0, 3.0), L, 1000));
}

TEST_CASE("particle in a box without the delta") {
  // box [-1, 2], exact E0 = pi^2 / (2 * 9)
  const double exact = std::numbers::pi * std::numbers::pi / 18.0;
  double previous = INFINITY;
  for (std::size_t n : {149, 299, 599}) {
    const auto model = diagonalize(build_hamiltonian(0.0, 1.0, 2.0, n));
    const double h = 3.0 / (n + 1.0);
    const double err = std::abs(model.energies.front() - exact);
    CHECK(err < exact * h * h);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("isolated delta well in a large box") {
  const auto model = make_spectral_model(AtomConfig::near_wall(1.0, 40.0), 40.0, 8000);
  CHECK(model.energies.front() == doctest::Approx(-0.5).epsilon(2e-3));
}

TEST_CASE("eigenvectors are orthonormal on the grid") {
  const auto model = make_spectral_model(AtomConfig::near_wall(0.5, 5.0), 30.0, 600, true);
  const std::size_t n = model.size();
  REQUIRE(model.eigenvectors.size() == n * n);
  const double h = model.grid.spacing;
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t p = pick(rng), q = trial % 5 == 0 ? p : pick(rng);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += model.eigenvectors[p * n + i] * model.eigenvectors[q * n + i];
    CHECK(h * dot == doctest::Approx(p == q ? 1.0 : 0.0).scale(1.0).epsilon(1e-10));
  }
  for (std::size_t i = 0; i < n; ++i) CHECK(model.eigenvectors[i] == doctest::Approx(model.ground_state[i]).scale(1.0).epsilon(1e-10));
  CHECK(std::is_sorted(model.energies.begin(), model.energies.end()));
}

TEST_CASE("sum rules") {
  const auto model = make_spectral_model(AtomConfig::near_wall(0.5, 5.0), 40.0, 4000);
  CHECK(trk_sum(model) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(dipole_completeness(model) == doctest::Approx(position_second_moment(model)).epsilon(1e-9));
}

TEST_CASE("static polarizability from the sum over states") {
  const auto iso = make_spectral_model(AtomConfig::isolated(1.0), 40.0, 8000);
  CHECK(static_alpha_oracle(iso) == doctest::Approx(1.25).epsilon(0.01));
  CHECK(static_alpha_oracle(iso) > 0.0);

  const auto cfg = AtomConfig::near_wall(0.25, 10.0);
  const auto bs = solve_bound_state(cfg);
  const auto box = default_oracle_box(bs);
  CHECK(box.length >= 40.0);
  CHECK(box.points == 8000);
  const auto model = make_spectral_model(cfg, box.length, box.points);
  CHECK(static_alpha_oracle(model) == doctest::Approx(static_polarizability(bs, cfg)).epsilon(0.01));
}

TEST_CASE("Richardson extrapolation tightens the oracle") {
  const auto cfg = AtomConfig::near_wall(0.5, 3.0);
  const auto bs = solve_bound_state(cfg);
  const double exact = static_polarizability(bs, cfg);
  const double L = snap_box_length(3.0, 60.0, 1499);
  // with L fixed, N + 1 doubling halves h
  const double coarse = static_alpha_oracle(diagonalize(build_hamiltonian(cfg, L, 1499)));
  const double fine = static_alpha_oracle(diagonalize(build_hamiltonian(cfg, L, 2999)));
  const double extrapolated = (4.0 * fine - coarse) / 3.0;
  CHECK(std::abs(fine - exact) < std::abs(coarse - exact));
  CHECK(std::abs(extrapolated - exact) < 0.2 * std::abs(fine - exact));
}

TEST_CASE("dynamic sum over states") {
  const auto cfg = AtomConfig::near_wall(0.25, 10.0);
  const auto bs = solve_bound_state(cfg);
  const auto model = make_spectral_model(cfg, 80.0, 4000);
  const double stat = static_alpha_oracle(model);
  const cplx at_zero = dynamic_alpha_oracle(model, 0.0, 1e-9);
  CHECK(at_zero.real() == doctest::Approx(stat).epsilon(1e-12));
  CHECK(std::abs(at_zero.imag()) < 1e-9);

  // below the first gap Im alpha is linear in eta
  const double im5 = dynamic_alpha_oracle(model, 0.01, 1e-5).imag();
  const double im7 = dynamic_alpha_oracle(model, 0.01, 1e-7).imag();
  CHECK(im7 > 0.0);
  CHECK(im7 / im5 == doctest::Approx(1e-2).epsilon(1e-3));

  // below the ionization threshold k_b^2/2 a modest box suffices
  for (double w : {0.01, 0.02}) {
    const cplx o = dynamic_alpha_oracle(model, w, default_eta);
    const cplx f = dynamic_polarizability(bs, cfg, w, default_eta);
    CHECK(std::abs(o - f) < 0.05 * std::abs(f));
  }
}
