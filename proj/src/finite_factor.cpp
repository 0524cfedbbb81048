#include "tomita/finite_factor.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace tomita {

namespace {

void check_shape(const MatrixElement& x, int n, const char* what) {
  if (x.rows() != n || x.cols() != n)
    throw ShapeMismatch(std::string(what) + ": expected " + std::to_string(n) +
                        "x" + std::to_string(n) + ", got " +
                        std::to_string(x.rows()) + "x" +
                        std::to_string(x.cols()));
}

void check_same_shape(const MatrixElement& a, const MatrixElement& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw ShapeMismatch(std::string(what) + ": shapes do not match");
}

}  // namespace

Complex inner_product(const MatrixElement& x, const MatrixElement& y,
                      const FactorContext& ctx) {
  check_shape(x, ctx.n, "inner_product x");
  check_shape(y, ctx.n, "inner_product y");
  // Tr(y^* x)/n; normalized so the trace vector has norm 1
  return (y.adjoint() * x).trace() / double(ctx.n);
}

double vector_norm(const MatrixElement& x, const FactorContext& ctx) {
  check_shape(x, ctx.n, "vector_norm");
  return x.norm() / std::sqrt(double(ctx.n));
}

MatrixElement trace_vector(const FactorContext& ctx) {
  return MatrixElement::Identity(ctx.n, ctx.n);
}

MatrixElement left_act(const MatrixElement& M, const MatrixElement& x) {
  check_same_shape(M, x, "left_act");
  return M * x;
}

MatrixElement right_act(const MatrixElement& M, const MatrixElement& x) {
  check_same_shape(M, x, "right_act");
  return x * M;
}

Complex normalized_trace(const MatrixElement& M, const FactorContext& ctx) {
  check_shape(M, ctx.n, "normalized_trace");
  return M.trace() / double(ctx.n);
}

AntilinearMap base_conjugation(const FactorContext& ctx) {
  // X |-> X^*: vec(X^*) = K vec(conj X), so the linear part is the
  // transposition permutation
  return AntilinearMap(transpose_permutation(ctx.n));
}

CVector vectorize(const MatrixElement& X) {
  return Eigen::Map<const CVector>(X.data(), X.size());
}

MatrixElement unvectorize(const CVector& x, int n) {
  if (x.size() != Eigen::Index(n) * n)
    throw ShapeMismatch("unvectorize: size is not n^2");
  return Eigen::Map<const MatrixElement>(x.data(), n, n);
}

Eigen::MatrixXcd left_mult_operator(const MatrixElement& A) {
  const Eigen::Index n = A.rows();
  return Eigen::kroneckerProduct(MatrixElement::Identity(n, n), A);
}

Eigen::MatrixXcd right_mult_operator(const MatrixElement& B) {
  const Eigen::Index n = B.rows();
  return Eigen::kroneckerProduct(B.transpose(), MatrixElement::Identity(n, n));
}

Eigen::MatrixXcd transpose_permutation(int n) {
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(n * n, n * n);
  // column-major: entry (i, j) of X sits at position j*n + i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) K(i * n + j, j * n + i) = 1.0;
  return K;
}

MatrixElement matrix_unit(int n, int i, int j) {
  MatrixElement E = MatrixElement::Zero(n, n);
  E(i, j) = 1.0;
  return E;
}

}  // namespace tomita
