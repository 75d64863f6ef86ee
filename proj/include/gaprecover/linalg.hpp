#pragma once

// Small dense complex linear algebra used by both recovery schemes.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace gaprecover {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Solves S y = b by Gaussian elimination with partial pivoting after row
/// equilibration. Throws SingularSystem when the estimated reciprocal
/// condition number falls to n * eps or the solution is non-finite.
CVector solve_pivoted(const CMatrix& S, const CVector& b);

/// Explicit inverse via the same factorization.
CMatrix inverse_pivoted(const CMatrix& S);

/// Largest singular value by power iteration on S^H S, to relative tolerance `tol`.
double spectral_norm(const CMatrix& S, double tol = 1e-10, int max_iter = 100000);

/// ||S||_2 * ||S^{-1}||_2.
double condition_2(const CMatrix& S);

CVector to_vector(std::span<const std::complex<double>> v);
std::vector<std::complex<double>> to_std(const CVector& v);

}  // namespace gaprecover
