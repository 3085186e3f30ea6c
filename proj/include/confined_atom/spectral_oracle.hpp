#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "confined_atom/atom.hpp"

namespace confined_atom {

using cplx = std::complex<double>;

// N interior points x_i = left + (i + 1) h of the box [left, right], with
// Dirichlet walls at both ends. The atom sits on point `origin`.
struct Grid {
  double left;
  double right;
  double spacing;
  std::size_t points;
  std::size_t origin;

  double x(std::size_t i) const { return left + static_cast<double>(i + 1) * spacing; }
};

// -1/2 d^2/dx^2 - Z delta(x) with the three-point stencil and the delta as
// -Z/h on the origin site.
struct TridiagonalHamiltonian {
  Grid grid;
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  // Row-major dense copy, for small grids.
  std::vector<double> dense() const;
};

// Box [-a, L] (or [-L, L] for the isolated atom) with N interior points.
// Throws std::invalid_argument("grid must contain origin") unless x = 0 is a
// grid point, and for L <= 0 or N < 2.
TridiagonalHamiltonian build_hamiltonian(const AtomConfig& cfg, double L, std::size_t N);

// Same for an arbitrary charge Z >= 0 on the box [-left_extent, L].
TridiagonalHamiltonian build_hamiltonian(double charge, double left_extent, double L, std::size_t N);

// Smallest L >= L_min for which the origin falls on the grid of N points.
double snap_box_length(double left_extent, double L_min, std::size_t N);

struct SpectralModel {
  Grid grid;
  std::vector<double> energies;      // ascending
  std::vector<double> dipoles;       // x_{0n} = h sum_i psi_0 x_i psi_n
  std::vector<double> ground_state;  // psi_0 on the grid, h sum psi_0^2 = 1
  // All eigenvectors when requested, column n at [n * N, (n + 1) * N),
  // normalized as h sum psi^2 = 1; empty otherwise.
  std::vector<double> eigenvectors;

  std::size_t size() const { return energies.size(); }
};

inline constexpr std::size_t max_points_with_eigenvectors = 4000;

// Eigenvalues and ground-state dipole elements in O(N^2); full eigenvectors
// in O(N^3) when asked for (N <= max_points_with_eigenvectors).
SpectralModel diagonalize(const TridiagonalHamiltonian& h, bool keep_eigenvectors = false);

struct OracleBox {
  double length;
  std::size_t points;
};

// L = max(40, 20/k_b) and N = 8000.
OracleBox default_oracle_box(const BoundState& bs);

// Builds and diagonalizes the model, stretching L to put the origin on the
// grid. For the isolated atom N is made odd so the origin is the centre.
SpectralModel make_spectral_model(const AtomConfig& cfg, double L_min, std::size_t N,
                                  bool keep_eigenvectors = false);

// 2 sum_{n>0} x_{0n}^2 / (E_n - E_0)
double static_alpha_oracle(const SpectralModel& model);

// sum_{n>0} x_{0n}^2 [1/(E_n - E_0 - omega - i eta) + 1/(E_n - E_0 + omega + i eta)];
// the n = 0 pair cancels identically.
cplx dynamic_alpha_oracle(const SpectralModel& model, double omega, double eta);

// sum_n 2 (E_n - E_0) x_{0n}^2, equal to one for a complete basis.
double trk_sum(const SpectralModel& model);

// sum_n x_{0n}^2 and h sum psi_0^2 x^2; equal by completeness.
double dipole_completeness(const SpectralModel& model);
double position_second_moment(const SpectralModel& model);

}  // namespace confined_atom
