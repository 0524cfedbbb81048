#pragma once

#include "tomita/antilinear.hpp"
#include "tomita/context.hpp"
#include "tomita/linalg.hpp"

namespace tomita {

// The finite factor M_n(C) in standard form: Hilbert space H = M_n(C)
// with <X, Y> = Tr(Y^* X)/n, trace vector u_tr = Id. Left multiplication
// is the algebra, right multiplication the commutant.

Complex inner_product(const MatrixElement& x, const MatrixElement& y,
                      const FactorContext& ctx);

// sqrt(<x, x>)
double vector_norm(const MatrixElement& x, const FactorContext& ctx);

MatrixElement trace_vector(const FactorContext& ctx);

// M * x  (algebra representation)
MatrixElement left_act(const MatrixElement& M, const MatrixElement& x);

// x * M  (commutant representation)
MatrixElement right_act(const MatrixElement& M, const MatrixElement& x);

// Tr(M)/n, so that the identity has trace 1
Complex normalized_trace(const MatrixElement& M, const FactorContext& ctx);

// X |-> X^*, the conjugation belonging to the trace vector
AntilinearMap base_conjugation(const FactorContext& ctx);

// Column-major vectorization of H and the induced n^2 x n^2 operators.
CVector vectorize(const MatrixElement& X);
MatrixElement unvectorize(const CVector& x, int n);

// vec(A X) = (I (x) A) vec(X)
Eigen::MatrixXcd left_mult_operator(const MatrixElement& A);
// vec(X B) = (B^T (x) I) vec(X)
Eigen::MatrixXcd right_mult_operator(const MatrixElement& B);
// vec(X^T) = K vec(X)
Eigen::MatrixXcd transpose_permutation(int n);

// matrix unit E_ij (1 at row i, column j; zero-based indices)
MatrixElement matrix_unit(int n, int i, int j);

}  // namespace tomita
