#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tomita/vector_operator.hpp"

namespace tomita {

// Finite truncation of the semifinite matrix-of-factors model: vectors
// and operators are N x N arrays of n x n matrix entries. For a vector
// the lower index (first) is the second tensor factor, the upper index
// (second) the third. The block trace is left unnormalized, so
// tr(Id) = N grows with the truncation.
struct BlockVector {
  int n = 0;
  int N = 0;
  std::vector<MatrixElement> blocks;  // row-major, blocks[i * N + j] = u_i^j

  const MatrixElement& block(int i, int j) const { return blocks[i * N + j]; }
  MatrixElement& block(int i, int j) { return blocks[i * N + j]; }
};

// Operator entries T_li act on the lower index: (T u)_l^k = sum_i T_li u_i^k.
struct BlockOperator {
  int n = 0;
  int N = 0;
  std::vector<MatrixElement> blocks;  // row-major, blocks[l * N + i] = T_li

  const MatrixElement& block(int l, int i) const { return blocks[l * N + i]; }
  MatrixElement& block(int l, int i) { return blocks[l * N + i]; }
};

BlockVector zero_block_vector(const FactorContext& ctx, int N);

// v_k, k = 1..N: u_tr at block (k, k), zero elsewhere. Mutually
// orthogonal unit vectors replacing the trace vector.
std::vector<BlockVector> basis_vectors(const FactorContext& ctx, int N);

Complex block_inner_product(const BlockVector& u, const BlockVector& v,
                            const FactorContext& ctx);

double block_norm_sq(const BlockVector& u, const FactorContext& ctx);

BlockVector block_apply(const BlockOperator& M, const BlockVector& u);

BlockVector block_add(const BlockVector& a, const BlockVector& b);

BlockOperator block_adjoint(const BlockOperator& M);

BlockOperator block_multiply(const BlockOperator& A, const BlockOperator& B);

// Unnormalized trace, evaluated both as sum_k tr(M_kk) and as
// sum_k <M v_k, v_k>; the two routes must agree to tol or
// FormulaMismatch is thrown.
Complex block_trace(const BlockOperator& M, const FactorContext& ctx);

// T_u with blocks T_ij = operator_from_vector(u_i^j); satisfies
// sum_k T_u v_k = u exactly.
BlockOperator assemble_T_u(const BlockVector& u, const FactorContext& ctx);

// (tr(T_u^* T_u), tr(T_u T_u^*), |u|^2); all three coincide.
std::array<double, 3> block_trace_condition(const BlockVector& u,
                                            const FactorContext& ctx);

// (injective, surjective) for the flattened (nN) x (nN) matrix of T_u.
std::pair<bool, bool> block_cyclic_separating(const BlockVector& u,
                                              const FactorContext& ctx);

// Dense (nN) x (nN) form; block (i, j) of the array maps to the n x n
// submatrix at (i*n, j*n).
Eigen::MatrixXcd flatten(const BlockVector& u);
Eigen::MatrixXcd flatten(const BlockOperator& M);
BlockVector unflatten_vector(const Eigen::MatrixXcd& U, int n, int N);
BlockOperator unflatten_operator(const Eigen::MatrixXcd& M, int n, int N);

}  // namespace tomita
