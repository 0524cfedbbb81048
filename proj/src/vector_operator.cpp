#include "tomita/vector_operator.hpp"

#include <cmath>

namespace tomita {

VectorOperatorPair operator_from_vector(const MatrixElement& u,
                                        const FactorContext& ctx) {
  if (u.rows() != ctx.n || u.cols() != ctx.n)
    throw ShapeMismatch("operator_from_vector: vector shape differs from ctx.n");
  if (!all_finite(u))
    throw InvalidArgument("operator_from_vector: non-finite entries");

  VectorOperatorPair pair;
  pair.u = u;
  // T u_tr = T * Id = u: the associated operator is the matrix itself
  pair.T = u;

  Eigen::JacobiSVD<MatrixElement> svd(pair.T);
  const auto& s = svd.singularValues();
  pair.sigma_max = s.size() > 0 ? s(0) : 0.0;
  pair.sigma_min = s.size() > 0 ? s(s.size() - 1) : 0.0;
  pair.rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > ctx.tol * pair.sigma_max) ++pair.rank;
  return pair;
}

MatrixElement vector_from_operator(const MatrixElement& T,
                                   const FactorContext& ctx) {
  return left_act(T, trace_vector(ctx));
}

bool is_cyclic(const VectorOperatorPair& pair, const FactorContext& ctx) {
  return pair.sigma_min > ctx.tol * pair.sigma_max;
}

bool is_separating(const VectorOperatorPair& pair, const FactorContext& ctx) {
  // square matrices: dense range <=> injective
  return is_cyclic(pair, ctx);
}

std::pair<double, double> trace_condition(const VectorOperatorPair& pair,
                                          const FactorContext& ctx) {
  const double tt = normalized_trace(pair.T * pair.T.adjoint(), ctx).real();
  const double ts = normalized_trace(pair.T.adjoint() * pair.T, ctx).real();
  return {tt, ts};
}

}  // namespace tomita
