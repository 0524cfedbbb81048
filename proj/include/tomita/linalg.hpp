#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tomita {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;

// An n x n complex matrix. In standard form it plays three roles at once:
// algebra element (left action), commutant element (right action), and
// Hilbert-space vector.
using MatrixElement = Eigen::MatrixXcd;

bool all_finite(const MatrixElement& A);

// Largest singular value.
double operator_norm(const MatrixElement& A);

// sigma_max / sigma_min; +inf when sigma_min == 0.
double condition_number(const MatrixElement& A);

MatrixElement hermitian_part(const MatrixElement& A);

bool is_hermitian(const MatrixElement& A, double tol);

// Matrix functions of Hermitian positive definite input, via
// eigendecomposition of the symmetrized matrix. All throw
// NotPositiveDefinite when the smallest eigenvalue fails the relative
// floor tol * lambda_max.
MatrixElement hermitian_sqrt(const MatrixElement& A, double tol);
MatrixElement hermitian_inverse(const MatrixElement& A, double tol);
MatrixElement hermitian_inverse_sqrt(const MatrixElement& A, double tol);

// A^{it} = exp(i t log A) for Hermitian positive definite A.
MatrixElement hermitian_imaginary_power(const MatrixElement& A, double t, double tol);

}  // namespace tomita
