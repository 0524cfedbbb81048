#pragma once

#include "tomita/linalg.hpp"

namespace tomita {

// Conjugate-linear operator on the n^2-dimensional Hilbert space
// H = M_n(C), stored as a linear matrix composed with entrywise
// conjugation: x |-> linear_part * conj(x) on vectorized matrices.
class AntilinearMap {
public:
  explicit AntilinearMap(Eigen::MatrixXcd linear_part);

  // dimension of the space acted on (n^2)
  int dim() const { return static_cast<int>(linear_.rows()); }
  // n, recovered from dim() = n^2
  int block_dim() const { return block_dim_; }

  const Eigen::MatrixXcd& linear_part() const { return linear_; }

  CVector apply(const CVector& x) const;
  MatrixElement apply(const MatrixElement& X) const;

private:
  Eigen::MatrixXcd linear_;
  int block_dim_;
};

// Composites. Two antilinear maps compose to a linear map:
// a(b(x)) = La * conj(Lb) * x.
Eigen::MatrixXcd compose(const AntilinearMap& a, const AntilinearMap& b);
AntilinearMap compose(const AntilinearMap& a, const Eigen::MatrixXcd& m);
AntilinearMap compose(const Eigen::MatrixXcd& m, const AntilinearMap& a);

// Adjoint with the convention <adj(a) x, y> = conj(<x, a y>); in the
// normalized Hilbert-Schmidt inner product this is the plain transpose
// of the linear part.
AntilinearMap adjoint(const AntilinearMap& a);

}  // namespace tomita
