#pragma once

#include <cstddef>
#include <vector>

namespace confined_atom {

// Symmetric tridiagonal eigensolver by implicit QL with Wilkinson shifts.
// On entry d holds the diagonal and e the n-1 off-diagonal entries; on exit
// d holds the eigenvalues in no particular order. Every rotation is also
// applied to the vectors stored in w (component-major: w[i * count + r] is
// component i of vector r), so that on exit w[n * count + r] = <v_r, q_n>,
// q_n being the eigenvector of d[n]. Passing the identity yields all
// eigenvectors; passing a few vectors yields their spectral coefficients in
// O(n^2) work.
void tridiagonal_ql(std::vector<double>& d, std::vector<double> e, std::vector<double>& w,
                    std::size_t count);

// Lowest eigenvalue by Sturm-sequence bisection.
double lowest_eigenvalue(const std::vector<double>& d, const std::vector<double>& e);

// Unit eigenvector for an isolated eigenvalue lambda by inverse iteration.
std::vector<double> inverse_iteration(const std::vector<double>& d, const std::vector<double>& e,
                                      double lambda);

}  // namespace confined_atom
