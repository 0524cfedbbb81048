#include "tomita/antilinear.hpp"

#include <cmath>

#include "tomita/errors.hpp"
#include "tomita/finite_factor.hpp"

namespace tomita {

AntilinearMap::AntilinearMap(Eigen::MatrixXcd linear_part)
    : linear_(std::move(linear_part)) {
  if (linear_.rows() != linear_.cols())
    throw ShapeMismatch("antilinear map must be square");
  const int d = static_cast<int>(linear_.rows());
  block_dim_ = static_cast<int>(std::lround(std::sqrt(double(d))));
  if (block_dim_ * block_dim_ != d)
    throw ShapeMismatch("antilinear map dimension is not a square");
  if (!all_finite(linear_))
    throw InvalidArgument("antilinear map has non-finite entries");
}

CVector AntilinearMap::apply(const CVector& x) const {
  if (x.size() != linear_.cols())
    throw ShapeMismatch("antilinear map applied to wrong-size vector");
  return linear_ * x.conjugate();
}

MatrixElement AntilinearMap::apply(const MatrixElement& X) const {
  if (X.rows() != block_dim_ || X.cols() != block_dim_)
    throw ShapeMismatch("antilinear map applied to wrong-shape matrix");
  return unvectorize(apply(CVector(vectorize(X))), block_dim_);
}

Eigen::MatrixXcd compose(const AntilinearMap& a, const AntilinearMap& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("composing maps of unequal dim");
  return a.linear_part() * b.linear_part().conjugate();
}

AntilinearMap compose(const AntilinearMap& a, const Eigen::MatrixXcd& m) {
  if (a.dim() != m.rows()) throw ShapeMismatch("composing maps of unequal dim");
  return AntilinearMap(a.linear_part() * m.conjugate());
}

AntilinearMap compose(const Eigen::MatrixXcd& m, const AntilinearMap& a) {
  if (a.dim() != m.cols()) throw ShapeMismatch("composing maps of unequal dim");
  return AntilinearMap(m * a.linear_part());
}

AntilinearMap adjoint(const AntilinearMap& a) {
  return AntilinearMap(a.linear_part().transpose());
}

}  // namespace tomita
