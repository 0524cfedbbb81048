#pragma once

#include <utility>

#include "tomita/antilinear.hpp"
#include "tomita/vector_operator.hpp"

namespace tomita {

// Modular objects generated from the polar decomposition T_{u0} = H V:
//
//   J0      X |-> V X^* V            (antiunitary conjugation)
//   Delta0  = J0 H0^{-1} J0 H0       (H0 = H^2 = T T^*, left action)
//   S       = H^{-1} V Jtilde V^* H  (Tomita operator, S A u0 = A^* u0)
//
// Delta0 is kept as a dense operator on the n^2-dimensional space.
struct ModularObjects {
  MatrixElement H0;
  MatrixElement V;
  AntilinearMap J0;
  Eigen::MatrixXcd Delta0;
  AntilinearMap S;
};

// Left polar decomposition T = H V with H = (T T^*)^{1/2} positive
// definite and V unitary. Throws SingularInput / IllConditioned.
std::pair<MatrixElement, MatrixElement> polar_decompose(
    const MatrixElement& T, const FactorContext& ctx);

// V Jtilde V^* as an antilinear map; acts as X |-> V X^* V.
AntilinearMap modular_conjugation(const MatrixElement& V,
                                  const FactorContext& ctx);

// The composite J0 H0^{-1} J0 H0 with H0 acting by left multiplication.
Eigen::MatrixXcd modular_operator(const MatrixElement& H0,
                                  const AntilinearMap& J0,
                                  const FactorContext& ctx);

// S = H^{-1} V Jtilde V^* H built from the polar factors of T.
AntilinearMap tomita_operator(const MatrixElement& T, const FactorContext& ctx);

ModularObjects make_modular_objects(const MatrixElement& T,
                                    const FactorContext& ctx);

// Definition-level construction, independent of the closed-form route:
// solve S(E_ij u0) = E_ij^* u0 over the matrix-unit basis, then factor
// the antilinear S as J Delta^{1/2} with Delta = adj(S) S.
struct TomitaOracleResult {
  Eigen::MatrixXcd delta;
  AntilinearMap conjugation;
  AntilinearMap tomita;
};

TomitaOracleResult tomita_oracle(const MatrixElement& u0,
                                 const FactorContext& ctx);

// sigma_t(A) = Delta0^{it} A Delta0^{-it}; the result is again an algebra
// element (left multiplication operator).
MatrixElement modular_flow(const Eigen::MatrixXcd& Delta0, double t,
                           const MatrixElement& A, const FactorContext& ctx);

}  // namespace tomita
