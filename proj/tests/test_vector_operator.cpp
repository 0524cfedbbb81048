#include <doctest.h>

#include <cmath>

#include "support/span_oracle.hpp"
#include "tomita/random.hpp"
#include "tomita/vector_operator.hpp"

using namespace tomita;
using tomita::testing::left_span_dimension;
using tomita::testing::right_span_dimension;

namespace {
const FactorContext ctx2(2);
}

TEST_CASE("operator from vector") {
  const MatrixElement utr = trace_vector(ctx2);
  auto p = operator_from_vector(utr, ctx2);
  CHECK((p.T - MatrixElement::Identity(2, 2)).norm() == 0.0);
  CHECK(p.rank == 2);
  CHECK(p.sigma_min == doctest::Approx(1.0));

  auto z = operator_from_vector(MatrixElement::Zero(2, 2), ctx2);
  CHECK(z.T.norm() == 0.0);
  CHECK(z.rank == 0);

  MatrixElement u = MatrixElement::Zero(2, 2);
  u(0, 0) = 1.0 / std::sqrt(2.5);
  u(1, 1) = 2.0 / std::sqrt(2.5);
  auto d = operator_from_vector(u, ctx2);
  CHECK(vector_norm(u, ctx2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.sigma_min == doctest::Approx(1.0 / std::sqrt(2.5)).epsilon(1e-14));
  CHECK((d.T - u).norm() == 0.0);
}

TEST_CASE("vector from operator round trip") {
  CHECK((vector_from_operator(MatrixElement::Identity(2, 2), ctx2) -
         trace_vector(ctx2))
            .norm() == 0.0);

  Rng rng(31);
  for (int it = 0; it < 20; ++it) {
    const MatrixElement T = random_matrix(rng, 2);
    const MatrixElement u = vector_from_operator(T, ctx2);
    CHECK((operator_from_vector(u, ctx2).T - T).norm() == 0.0);
    // tr(T^* T) = |u|^2, three independent evaluations
    const double lhs = (T.adjoint() * T).trace().real() / 2.0;
    const double rhs = inner_product(u, u, ctx2).real();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("cyclic and separating predicates with span oracle") {
  const FactorContext& ctx = ctx2;

  auto p_tr = operator_from_vector(trace_vector(ctx), ctx);
  CHECK(is_cyclic(p_tr, ctx));
  CHECK(is_separating(p_tr, ctx));

  MatrixElement u = MatrixElement::Zero(2, 2);
  u(0, 0) = 1.0;
  auto p = operator_from_vector(u, ctx);
  CHECK_FALSE(is_cyclic(p, ctx));
  CHECK_FALSE(is_separating(p, ctx));
  // definitional spans have dimension 2 < 4
  CHECK(left_span_dimension(u, ctx.tol) == 2);
  CHECK(right_span_dimension(u, ctx.tol) == 2);

  Rng rng(32);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + int(rng() % 3);
    const FactorContext c(n);
    std::uniform_real_distribution<double> kappa(1.0, 1000.0);
    const MatrixElement v = random_invertible(rng, n, kappa(rng));
    auto q = operator_from_vector(v, c);
    CHECK(is_cyclic(q, c));
    CHECK(left_span_dimension(v, c.tol) == n * n);
    CHECK(right_span_dimension(v, c.tol) == n * n);
  }
}

TEST_CASE("cyclic iff separating, including rank-deficient inputs") {
  Rng rng(33);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + int(rng() % 3);
    const FactorContext c(n);
    const int rank = int(rng() % n);  // deliberately singular
    const MatrixElement u = random_rank_deficient(rng, n, rank);
    auto p = operator_from_vector(u, c);
    CHECK(is_cyclic(p, c) == is_separating(p, c));
    CHECK_FALSE(is_cyclic(p, c));
    CHECK(p.rank == rank);
    CHECK(left_span_dimension(u, c.tol) == n * rank);
    CHECK(right_span_dimension(u, c.tol) == n * rank);
  }
}

TEST_CASE("trace condition") {
  auto p_tr = operator_from_vector(trace_vector(ctx2), ctx2);
  auto [a, b] = trace_condition(p_tr, ctx2);
  CHECK(a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b == doctest::Approx(1.0).epsilon(1e-14));

  auto p0 = operator_from_vector(MatrixElement::Zero(2, 2), ctx2);
  auto [za, zb] = trace_condition(p0, ctx2);
  CHECK(za == 0.0);
  CHECK(zb == 0.0);

  Rng rng(34);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + int(rng() % 4);
    const FactorContext c(n);
    const MatrixElement u = random_matrix(rng, n);
    auto p = operator_from_vector(u, c);
    auto [tt, ts] = trace_condition(p, c);
    const double nsq = inner_product(u, u, c).real();
    CHECK(std::abs(tt - nsq) <= 1e-10 * std::max(1.0, nsq));
    CHECK(std::abs(ts - nsq) <= 1e-10 * std::max(1.0, nsq));
  }
}
