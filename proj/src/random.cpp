#include "tomita/random.hpp"

#include <cmath>

#include "tomita/errors.hpp"

namespace tomita {

MatrixElement random_matrix(Rng& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixElement A(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) A(i, j) = Complex(gauss(rng), gauss(rng));
  return A;
}

MatrixElement random_unitary(Rng& rng, int n) {
  const MatrixElement A = random_matrix(rng, n);
  Eigen::HouseholderQR<MatrixElement> qr(A);
  MatrixElement Q = qr.householderQ();
  const MatrixElement R = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so Q is distributed independently of R
  for (int j = 0; j < n; ++j) {
    const Complex d = R(j, j);
    const double a = std::abs(d);
    Q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return Q;
}

MatrixElement random_invertible(Rng& rng, int n, double cond) {
  if (!(cond >= 1.0)) throw InvalidArgument("condition number must be >= 1");
  const MatrixElement U = random_unitary(rng, n);
  const MatrixElement W = random_unitary(rng, n);
  Eigen::VectorXd s(n);
  s(0) = 1.0;
  if (n > 1) {
    s(n - 1) = 1.0 / cond;
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 1; i + 1 < n; ++i)
      s(i) = std::pow(cond, -uni(rng));  // log-uniform in [1/cond, 1]
    std::sort(s.data(), s.data() + n, std::greater<double>());
  }
  return U * s.cast<Complex>().asDiagonal() * W.adjoint();
}

MatrixElement random_rank_deficient(Rng& rng, int n, int rank) {
  if (rank < 0 || rank >= n)
    throw InvalidArgument("rank must lie in [0, n)");
  const MatrixElement U = random_unitary(rng, n);
  const MatrixElement W = random_unitary(rng, n);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < rank; ++i) s(i) = 0.5 + uni(rng);
  std::sort(s.data(), s.data() + n, std::greater<double>());
  return U * s.cast<Complex>().asDiagonal() * W.adjoint();
}

}  // namespace tomita
