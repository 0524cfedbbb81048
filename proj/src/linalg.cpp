#include "tomita/linalg.hpp"

#include <cmath>
#include <limits>

#include "tomita/errors.hpp"

namespace tomita {

bool all_finite(const MatrixElement& A) {
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      const Complex z = A(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

double operator_norm(const MatrixElement& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixElement> svd(A);
  return svd.singularValues()(0);
}

double condition_number(const MatrixElement& A) {
  Eigen::JacobiSVD<MatrixElement> svd(A);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

MatrixElement hermitian_part(const MatrixElement& A) {
  return 0.5 * (A + A.adjoint());
}

bool is_hermitian(const MatrixElement& A, double tol) {
  const double scale = std::max(1.0, A.norm());
  return (A - A.adjoint()).norm() <= tol * scale;
}

namespace {

// f applied through the eigendecomposition of the symmetrized input;
// rejects eigenvalues below the relative floor when positive is required
template <typename F>
MatrixElement hermitian_apply(const MatrixElement& A, double tol, F f,
                              bool require_positive) {
  Eigen::SelfAdjointEigenSolver<MatrixElement> es(hermitian_part(A));
  if (es.info() != Eigen::Success)
    throw NotPositiveDefinite("eigendecomposition failed");
  const Eigen::VectorXd& ew = es.eigenvalues();
  const double lmax = ew.cwiseAbs().maxCoeff();
  if (require_positive && ew(0) <= tol * lmax)
    throw NotPositiveDefinite("smallest eigenvalue " + std::to_string(ew(0)) +
                              " below relative floor");
  Eigen::VectorXcd fv(ew.size());
  for (Eigen::Index i = 0; i < ew.size(); ++i) fv(i) = f(ew(i));
  return es.eigenvectors() * fv.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

MatrixElement hermitian_sqrt(const MatrixElement& A, double tol) {
  return hermitian_apply(
      A, tol, [](double x) { return Complex(std::sqrt(x), 0.0); }, true);
}

MatrixElement hermitian_inverse(const MatrixElement& A, double tol) {
  return hermitian_apply(
      A, tol, [](double x) { return Complex(1.0 / x, 0.0); }, true);
}

MatrixElement hermitian_inverse_sqrt(const MatrixElement& A, double tol) {
  return hermitian_apply(
      A, tol, [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); }, true);
}

MatrixElement hermitian_imaginary_power(const MatrixElement& A, double t,
                                        double tol) {
  return hermitian_apply(
      A, tol,
      [t](double x) {
        const double phase = t * std::log(x);
        return Complex(std::cos(phase), std::sin(phase));
      },
      true);
}

}  // namespace tomita
