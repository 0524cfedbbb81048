#pragma once

#include <utility>

#include "tomita/finite_factor.hpp"

namespace tomita {

// The vector <-> operator correspondence: for every u in H there is
// exactly one algebra element T with T u_tr = u. In this standard form
// T equals u read as a matrix.
struct VectorOperatorPair {
  MatrixElement u;
  MatrixElement T;
  int rank = 0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;

  // sigma_min / sigma_max; decisions with margin near ctx.tol sit in the
  // ambiguous band and are reported rather than asserted through.
  double injectivity_margin() const {
    return sigma_max > 0.0 ? sigma_min / sigma_max : 0.0;
  }
};

VectorOperatorPair operator_from_vector(const MatrixElement& u,
                                        const FactorContext& ctx);

// left_act(T, u_tr); inverse of operator_from_vector
MatrixElement vector_from_operator(const MatrixElement& T,
                                   const FactorContext& ctx);

// u cyclic iff T_u injective: sigma_min > tol * |T|
bool is_cyclic(const VectorOperatorPair& pair, const FactorContext& ctx);

// u separating iff T_u has dense range; for square matrices this
// coincides with injectivity
bool is_separating(const VectorOperatorPair& pair, const FactorContext& ctx);

// (tr(T T^*), tr(T^* T)); both equal |u|^2
std::pair<double, double> trace_condition(const VectorOperatorPair& pair,
                                          const FactorContext& ctx);

}  // namespace tomita
