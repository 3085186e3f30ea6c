#include "confined_atom/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "confined_atom/tridiagonal.hpp"

namespace confined_atom {

std::vector<double> TridiagonalHamiltonian::dense() const {
  const std::size_t n = diagonal.size();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = diagonal[i];
    if (i + 1 < n) {
      m[i * n + i + 1] = off_diagonal[i];
      m[(i + 1) * n + i] = off_diagonal[i];
    }
  }
  return m;
}

TridiagonalHamiltonian build_hamiltonian(double charge, double left_extent, double L, std::size_t N) {
  if (!(L > 0.0) || !(left_extent > 0.0)) throw std::invalid_argument("box extents must be positive");
  if (N < 2) throw std::invalid_argument("grid needs at least two points");
  if (charge < 0.0) throw std::invalid_argument("charge must be >= 0");
  const double h = (L + left_extent) / static_cast<double>(N + 1);
  const double steps = left_extent / h;
  const double nearest = std::round(steps);
  if (std::abs(steps - nearest) > 1e-9 * std::max(1.0, steps) || nearest < 1.0 ||
      nearest > static_cast<double>(N))
    throw std::invalid_argument("grid must contain origin");

  TridiagonalHamiltonian t;
  t.grid = {-left_extent, L, h, N, static_cast<std::size_t>(nearest) - 1};
  t.diagonal.assign(N, 1.0 / (h * h));
  t.diagonal[t.grid.origin] -= charge / h;
  t.off_diagonal.assign(N - 1, -0.5 / (h * h));
  return t;
}

TridiagonalHamiltonian build_hamiltonian(const AtomConfig& cfg, double L, std::size_t N) {
  return build_hamiltonian(cfg.charge(), cfg.is_isolated() ? L : cfg.wall_distance(), L, N);
}

double snap_box_length(double left_extent, double L_min, std::size_t N) {
  const double n1 = static_cast<double>(N + 1);
  const double m = std::max(1.0, std::floor(left_extent * n1 / (L_min + left_extent)));
  const double h = left_extent / m;
  return n1 * h - left_extent;
}

SpectralModel diagonalize(const TridiagonalHamiltonian& t, bool keep_eigenvectors) {
  const std::size_t n = t.diagonal.size();
  if (keep_eigenvectors && n > max_points_with_eigenvectors)
    throw std::invalid_argument("too many grid points to keep eigenvectors");
  const double h = t.grid.spacing;

  // Ground state first, so the QL sweep only has to carry x psi_0 along.
  const double e0 = lowest_eigenvalue(t.diagonal, t.off_diagonal);
  std::vector<double> v0 = inverse_iteration(t.diagonal, t.off_diagonal, e0);
  if (v0[t.grid.origin] < 0.0)
    for (double& v : v0) v = -v;

  const std::size_t count = keep_eigenvectors ? n + 2 : 2;
  std::vector<double> w(n * count, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    w[i * count] = t.grid.x(i) * v0[i];
    w[i * count + 1] = v0[i];
    if (keep_eigenvectors) w[i * count + 2 + i] = 1.0;
  }
  std::vector<double> d = t.diagonal;
  tridiagonal_ql(d, t.off_diagonal, w, count);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  // QL returns q_0 with an arbitrary sign; flip it onto v0 so that x_00 and the
  // stored first column refer to the same ground state.
  const double sign = w[order[0] * count + 1] < 0.0 ? -1.0 : 1.0;

  SpectralModel m;
  m.grid = t.grid;
  m.energies.resize(n);
  m.dipoles.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    m.energies[j] = d[order[j]];
    m.dipoles[j] = w[order[j] * count];
  }
  m.dipoles[0] *= sign;
  m.ground_state.resize(n);
  const double inv_sqrt_h = 1.0 / std::sqrt(h);
  for (std::size_t i = 0; i < n; ++i) m.ground_state[i] = v0[i] * inv_sqrt_h;
  if (keep_eigenvectors) {
    m.eigenvectors.resize(n * n);
    // w[j * count + 2 + i] = <e_i, q_j> = component i of eigenvector j
    for (std::size_t j = 0; j < n; ++j) {
      const double* src = w.data() + order[j] * count + 2;
      double* dst = m.eigenvectors.data() + j * n;
      const double s = j == 0 ? sign * inv_sqrt_h : inv_sqrt_h;
      for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] * s;
    }
  }
  return m;
}

OracleBox default_oracle_box(const BoundState& bs) {
  return {std::max(40.0, 20.0 / bs.wave_vector), 8000};
}

SpectralModel make_spectral_model(const AtomConfig& cfg, double L_min, std::size_t N,
                                  bool keep_eigenvectors) {
  if (cfg.is_isolated()) {
    if (N % 2 == 0) ++N;
    return diagonalize(build_hamiltonian(cfg, L_min, N), keep_eigenvectors);
  }
  const double L = snap_box_length(cfg.wall_distance(), L_min, N);
  return diagonalize(build_hamiltonian(cfg, L, N), keep_eigenvectors);
}

double static_alpha_oracle(const SpectralModel& model) {
  double sum = 0.0;
  for (std::size_t n = 1; n < model.size(); ++n)
    sum += model.dipoles[n] * model.dipoles[n] / (model.energies[n] - model.energies[0]);
  return 2.0 * sum;
}

cplx dynamic_alpha_oracle(const SpectralModel& model, double omega, double eta) {
  const cplx z{omega, eta};
  cplx sum = 0.0;
  for (std::size_t n = 1; n < model.size(); ++n) {
    const double gap = model.energies[n] - model.energies[0];
    sum += model.dipoles[n] * model.dipoles[n] * (1.0 / (gap - z) + 1.0 / (gap + z));
  }
  return sum;
}

double trk_sum(const SpectralModel& model) {
  double sum = 0.0;
  for (std::size_t n = 1; n < model.size(); ++n)
    sum += 2.0 * (model.energies[n] - model.energies[0]) * model.dipoles[n] * model.dipoles[n];
  return sum;
}

double dipole_completeness(const SpectralModel& model) {
  double sum = 0.0;
  for (double x : model.dipoles) sum += x * x;
  return sum;
}

double position_second_moment(const SpectralModel& model) {
  double sum = 0.0;
  for (std::size_t i = 0; i < model.grid.points; ++i) {
    const double x = model.grid.x(i);
    sum += model.ground_state[i] * model.ground_state[i] * x * x;
  }
  return sum * model.grid.spacing;
}

}  // namespace confined_atom
