#include "tomita/modular_engine.hpp"

#include <cmath>
#include <string>

namespace tomita {

namespace {

void check_square(const MatrixElement& T, int n, const char* what) {
  if (T.rows() != n || T.cols() != n)
    throw ShapeMismatch(std::string(what) + ": expected " + std::to_string(n) +
                        "x" + std::to_string(n));
}

}  // namespace

std::pair<MatrixElement, MatrixElement> polar_decompose(
    const MatrixElement& T, const FactorContext& ctx) {
  check_square(T, ctx.n, "polar_decompose");
  if (!all_finite(T)) throw InvalidArgument("polar_decompose: non-finite input");

  Eigen::JacobiSVD<MatrixElement> svd(T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smin <= ctx.tol * smax)
    throw SingularInput("sigma_min = " + std::to_string(smin) +
                        " <= tol * |T| = " + std::to_string(ctx.tol * smax));
  if (smax / smin > ctx.cond_limit)
    throw IllConditioned("condition number " + std::to_string(smax / smin) +
                         " exceeds limit " + std::to_string(ctx.cond_limit));

  // left polar convention: T = H V with H = (T T^*)^{1/2} = U S U^*
  const MatrixElement H =
      svd.matrixU() * s.asDiagonal().toDenseMatrix().cast<Complex>() *
      svd.matrixU().adjoint();
  const MatrixElement V = svd.matrixU() * svd.matrixV().adjoint();
  return {hermitian_part(H), V};
}

AntilinearMap modular_conjugation(const MatrixElement& V,
                                  const FactorContext& ctx) {
  check_square(V, ctx.n, "modular_conjugation");
  const double unit_resid =
      (V.adjoint() * V - MatrixElement::Identity(ctx.n, ctx.n)).norm();
  if (unit_resid > ctx.tol * ctx.n)
    throw NotUnitary("V^*V - Id residual " + std::to_string(unit_resid));
  // X |-> V X^* V: vec form (V^T (x) V) K conj(x)
  return AntilinearMap((right_mult_operator(V) * left_mult_operator(V)) *
                       transpose_permutation(ctx.n));
}

Eigen::MatrixXcd modular_operator(const MatrixElement& H0,
                                  const AntilinearMap& J0,
                                  const FactorContext& ctx) {
  check_square(H0, ctx.n, "modular_operator");
  if (!is_hermitian(H0, ctx.tol))
    throw NotPositiveDefinite("H0 is not Hermitian");
  const MatrixElement H0inv = hermitian_inverse(H0, ctx.tol);
  if (J0.block_dim() != ctx.n)
    throw ShapeMismatch("modular_operator: J0 dimension mismatch");
  const double conj_resid =
      (compose(J0, J0) - Eigen::MatrixXcd::Identity(J0.dim(), J0.dim())).norm();
  if (conj_resid > ctx.tol * J0.dim())
    throw InvalidArgument("modular_operator: J0 is not a conjugation");

  // J0 H0^{-1} J0 H0 grouped as (J0 L_{H0^-1}) after (J0 L_{H0})
  const AntilinearMap a1 = compose(J0, left_mult_operator(H0inv));
  const AntilinearMap a2 = compose(J0, left_mult_operator(H0));
  return compose(a1, a2);
}

AntilinearMap tomita_operator(const MatrixElement& T, const FactorContext& ctx) {
  auto [H, V] = polar_decompose(T, ctx);
  const MatrixElement Hinv = hermitian_inverse(H, ctx.tol);
  // S = H^{-1} V Jtilde V^* H
  const AntilinearMap inner =
      compose(base_conjugation(ctx), left_mult_operator(V.adjoint() * H));
  return compose(left_mult_operator(Hinv * V), inner);
}

ModularObjects make_modular_objects(const MatrixElement& T,
                                    const FactorContext& ctx) {
  auto [H, V] = polar_decompose(T, ctx);
  const MatrixElement H0 = hermitian_part(T * T.adjoint());
  AntilinearMap J0 = modular_conjugation(V, ctx);
  Eigen::MatrixXcd Delta0 = modular_operator(H0, J0, ctx);
  AntilinearMap S = tomita_operator(T, ctx);
  return ModularObjects{H0, V, std::move(J0), std::move(Delta0), std::move(S)};
}

TomitaOracleResult tomita_oracle(const MatrixElement& u0,
                                 const FactorContext& ctx) {
  const VectorOperatorPair pair = operator_from_vector(u0, ctx);
  if (!is_cyclic(pair, ctx) || condition_number(pair.T) > ctx.cond_limit)
    throw NotCyclicSeparating(
        "u0 must be cyclic and separating within the condition limit");

  // S is fixed by S(E_ij u0) = E_ij^* u0 on the basis {E_ij u0}: collect
  // the conjugated basis images and solve for the linear part.
  const int n = ctx.n;
  const int d = n * n;
  Eigen::MatrixXcd B(d, d);
  Eigen::MatrixXcd R(d, d);
  int col = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const MatrixElement E = matrix_unit(n, i, j);
      B.col(col) = vectorize(left_act(E, u0)).conjugate();
      R.col(col) = vectorize(left_act(E.adjoint(), u0));
      ++col;
    }
  // L B = R
  const Eigen::MatrixXcd Lt =
      B.transpose().colPivHouseholderQr().solve(R.transpose());
  AntilinearMap S(Lt.transpose());

  // antilinear polar factorization S = J Delta^{1/2}
  const Eigen::MatrixXcd delta = hermitian_part(compose(adjoint(S), S));
  AntilinearMap J = compose(S, hermitian_inverse_sqrt(delta, ctx.tol));
  return TomitaOracleResult{delta, std::move(J), std::move(S)};
}

MatrixElement modular_flow(const Eigen::MatrixXcd& Delta0, double t,
                           const MatrixElement& A, const FactorContext& ctx) {
  const int d = ctx.n * ctx.n;
  if (Delta0.rows() != d || Delta0.cols() != d)
    throw ShapeMismatch("modular_flow: Delta0 dimension mismatch");
  if (!is_hermitian(Delta0, ctx.tol))
    throw NotPositiveDefinite("modular_flow: Delta0 is not Hermitian");
  check_square(A, ctx.n, "modular_flow A");

  const Eigen::MatrixXcd Dit = hermitian_imaginary_power(Delta0, t, ctx.tol);
  // Delta^{-it} = (Delta^{it})^* for positive Delta
  const Eigen::MatrixXcd comp = Dit * left_mult_operator(A) * Dit.adjoint();
  return unvectorize(comp * vectorize(trace_vector(ctx)), ctx.n);
}

}  // namespace tomita
