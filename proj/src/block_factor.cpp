#include "tomita/block_factor.hpp"

#include <cmath>
#include <string>

namespace tomita {

namespace {

void check_block_shape(int n, int N, const std::vector<MatrixElement>& blocks,
                       const char* what) {
  if (n < 1 || N < 1 || blocks.size() != size_t(N) * size_t(N))
    throw ShapeMismatch(std::string(what) + ": bad block layout");
  for (const auto& b : blocks)
    if (b.rows() != n || b.cols() != n)
      throw ShapeMismatch(std::string(what) + ": block entry shape mismatch");
}

void check_compatible(int n1, int N1, int n2, int N2, const char* what) {
  if (n1 != n2 || N1 != N2)
    throw ShapeMismatch(std::string(what) + ": block shapes do not match");
}

}  // namespace

BlockVector zero_block_vector(const FactorContext& ctx, int N) {
  if (N < 1) throw InvalidArgument("block truncation N must be >= 1");
  BlockVector u;
  u.n = ctx.n;
  u.N = N;
  u.blocks.assign(size_t(N) * size_t(N), MatrixElement::Zero(ctx.n, ctx.n));
  return u;
}

std::vector<BlockVector> basis_vectors(const FactorContext& ctx, int N) {
  std::vector<BlockVector> vs;
  vs.reserve(N);
  for (int k = 0; k < N; ++k) {
    BlockVector v = zero_block_vector(ctx, N);
    v.block(k, k) = trace_vector(ctx);
    vs.push_back(std::move(v));
  }
  return vs;
}

Complex block_inner_product(const BlockVector& u, const BlockVector& v,
                            const FactorContext& ctx) {
  check_block_shape(u.n, u.N, u.blocks, "block_inner_product u");
  check_compatible(u.n, u.N, v.n, v.N, "block_inner_product");
  Complex acc = 0.0;
  for (size_t b = 0; b < u.blocks.size(); ++b)
    acc += inner_product(u.blocks[b], v.blocks[b], ctx);
  return acc;
}

double block_norm_sq(const BlockVector& u, const FactorContext& ctx) {
  check_block_shape(u.n, u.N, u.blocks, "block_norm_sq");
  double acc = 0.0;
  for (const auto& b : u.blocks) acc += b.squaredNorm() / double(ctx.n);
  return acc;
}

BlockVector block_apply(const BlockOperator& M, const BlockVector& u) {
  check_block_shape(M.n, M.N, M.blocks, "block_apply M");
  check_compatible(M.n, M.N, u.n, u.N, "block_apply");
  BlockVector out;
  out.n = u.n;
  out.N = u.N;
  out.blocks.assign(u.blocks.size(), MatrixElement::Zero(u.n, u.n));
  // (M u)_l^k = sum_i M_li u_i^k
  for (int l = 0; l < u.N; ++l)
    for (int k = 0; k < u.N; ++k)
      for (int i = 0; i < u.N; ++i)
        out.block(l, k) += M.block(l, i) * u.block(i, k);
  return out;
}

BlockVector block_add(const BlockVector& a, const BlockVector& b) {
  check_compatible(a.n, a.N, b.n, b.N, "block_add");
  BlockVector out = a;
  for (size_t i = 0; i < out.blocks.size(); ++i) out.blocks[i] += b.blocks[i];
  return out;
}

BlockOperator block_adjoint(const BlockOperator& M) {
  check_block_shape(M.n, M.N, M.blocks, "block_adjoint");
  BlockOperator out;
  out.n = M.n;
  out.N = M.N;
  out.blocks.assign(M.blocks.size(), MatrixElement());
  for (int l = 0; l < M.N; ++l)
    for (int i = 0; i < M.N; ++i)
      out.block(l, i) = M.block(i, l).adjoint();
  return out;
}

BlockOperator block_multiply(const BlockOperator& A, const BlockOperator& B) {
  check_compatible(A.n, A.N, B.n, B.N, "block_multiply");
  BlockOperator out;
  out.n = A.n;
  out.N = A.N;
  out.blocks.assign(A.blocks.size(), MatrixElement::Zero(A.n, A.n));
  for (int l = 0; l < A.N; ++l)
    for (int i = 0; i < A.N; ++i)
      for (int j = 0; j < A.N; ++j)
        out.block(l, i) += A.block(l, j) * B.block(j, i);
  return out;
}

Complex block_trace(const BlockOperator& M, const FactorContext& ctx) {
  check_block_shape(M.n, M.N, M.blocks, "block_trace");
  if (M.n != ctx.n) throw ShapeMismatch("block_trace: ctx dimension mismatch");

  // route 1: diagonal block traces
  Complex by_blocks = 0.0;
  for (int k = 0; k < M.N; ++k)
    by_blocks += normalized_trace(M.block(k, k), ctx);

  // route 2: sum_k <M v_k, v_k>
  Complex by_vectors = 0.0;
  const auto vs = basis_vectors(ctx, M.N);
  for (int k = 0; k < M.N; ++k)
    by_vectors += block_inner_product(block_apply(M, vs[k]), vs[k], ctx);

  double scale = 1.0;
  for (const auto& b : M.blocks) scale += b.squaredNorm();
  scale = std::sqrt(scale);
  if (std::abs(by_blocks - by_vectors) > ctx.tol * scale)
    throw FormulaMismatch("block trace evaluations differ by " +
                          std::to_string(std::abs(by_blocks - by_vectors)));
  return by_blocks;
}

BlockOperator assemble_T_u(const BlockVector& u, const FactorContext& ctx) {
  check_block_shape(u.n, u.N, u.blocks, "assemble_T_u");
  if (u.n != ctx.n) throw ShapeMismatch("assemble_T_u: ctx dimension mismatch");
  BlockOperator T;
  T.n = u.n;
  T.N = u.N;
  T.blocks.reserve(u.blocks.size());
  for (const auto& entry : u.blocks)
    T.blocks.push_back(operator_from_vector(entry, ctx).T);
  return T;
}

std::array<double, 3> block_trace_condition(const BlockVector& u,
                                            const FactorContext& ctx) {
  const BlockOperator T = assemble_T_u(u, ctx);
  const BlockOperator Ts = block_adjoint(T);
  const double tst = block_trace(block_multiply(Ts, T), ctx).real();
  const double tts = block_trace(block_multiply(T, Ts), ctx).real();
  return {tst, tts, block_norm_sq(u, ctx)};
}

std::pair<bool, bool> block_cyclic_separating(const BlockVector& u,
                                              const FactorContext& ctx) {
  const BlockOperator T = assemble_T_u(u, ctx);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(flatten(T));
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  const bool injective = smin > ctx.tol * smax;
  // square flattened matrix: dense range <=> injective
  return {injective, injective};
}

Eigen::MatrixXcd flatten(const BlockVector& u) {
  check_block_shape(u.n, u.N, u.blocks, "flatten");
  Eigen::MatrixXcd out(u.n * u.N, u.n * u.N);
  for (int i = 0; i < u.N; ++i)
    for (int j = 0; j < u.N; ++j)
      out.block(i * u.n, j * u.n, u.n, u.n) = u.block(i, j);
  return out;
}

Eigen::MatrixXcd flatten(const BlockOperator& M) {
  check_block_shape(M.n, M.N, M.blocks, "flatten");
  Eigen::MatrixXcd out(M.n * M.N, M.n * M.N);
  for (int l = 0; l < M.N; ++l)
    for (int i = 0; i < M.N; ++i)
      out.block(l * M.n, i * M.n, M.n, M.n) = M.block(l, i);
  return out;
}

BlockVector unflatten_vector(const Eigen::MatrixXcd& U, int n, int N) {
  if (U.rows() != Eigen::Index(n) * N || U.cols() != Eigen::Index(n) * N)
    throw ShapeMismatch("unflatten_vector: size mismatch");
  BlockVector u;
  u.n = n;
  u.N = N;
  u.blocks.reserve(size_t(N) * size_t(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      u.blocks.push_back(U.block(i * n, j * n, n, n));
  return u;
}

BlockOperator unflatten_operator(const Eigen::MatrixXcd& M, int n, int N) {
  const BlockVector v = unflatten_vector(M, n, N);
  BlockOperator out;
  out.n = n;
  out.N = N;
  out.blocks = v.blocks;
  return out;
}

}  // namespace tomita
