#include <doctest.h>

#include "tomita/finite_factor.hpp"
#include "tomita/random.hpp"

using namespace tomita;

namespace {
const FactorContext ctx2(2);

MatrixElement diag2(Complex a, Complex b) {
  MatrixElement d = MatrixElement::Zero(2, 2);
  d(0, 0) = a;
  d(1, 1) = b;
  return d;
}
}  // namespace

TEST_CASE("inner product on the standard form") {
  const MatrixElement id = trace_vector(ctx2);
  CHECK(inner_product(id, id, ctx2) == Complex(1.0, 0.0));
  CHECK(std::abs(inner_product(id, diag2(1, -1), ctx2)) == 0.0);
  // Tr(y^* x)/2 = (3 + 8)/2
  CHECK(inner_product(diag2(1, 2), diag2(3, 4), ctx2) == Complex(5.5, 0.0));

  CHECK(vector_norm(trace_vector(FactorContext(5)), FactorContext(5)) ==
        doctest::Approx(1.0).epsilon(1e-14));

  MatrixElement wrong = MatrixElement::Zero(3, 3);
  CHECK_THROWS_AS(inner_product(id, wrong, ctx2), ShapeMismatch);
}

TEST_CASE("inner product is conjugate symmetric and positive") {
  Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    const MatrixElement x = random_matrix(rng, 2);
    const MatrixElement y = random_matrix(rng, 2);
    const Complex a = inner_product(x, y, ctx2);
    const Complex b = inner_product(y, x, ctx2);
    CHECK(std::abs(a - std::conj(b)) < 1e-13);
    CHECK(inner_product(x, x, ctx2).real() >= 0.0);
  }
}

TEST_CASE("trace vector") {
  CHECK(trace_vector(FactorContext(1))(0, 0) == Complex(1.0, 0.0));
  const FactorContext ctx3(3);
  CHECK((trace_vector(ctx3) - MatrixElement::Identity(3, 3)).norm() == 0.0);

  // tr(M) through the vector formula
  const MatrixElement M = diag2(1, 2);
  const Complex via_vector =
      inner_product(left_act(M, trace_vector(ctx2)), trace_vector(ctx2), ctx2);
  CHECK(via_vector == Complex(1.5, 0.0));
  CHECK(std::abs(via_vector - normalized_trace(M, ctx2)) <= 1e-15);
}

TEST_CASE("left and right actions") {
  Rng rng(12);
  const MatrixElement x = random_matrix(rng, 2);
  const MatrixElement id = MatrixElement::Identity(2, 2);

  CHECK((left_act(id, x) - x).norm() == 0.0);
  CHECK(left_act(MatrixElement::Zero(2, 2), x).norm() == 0.0);
  const MatrixElement nil = matrix_unit(2, 0, 1);
  CHECK((left_act(nil, id) - nil).norm() == 0.0);

  CHECK((right_act(id, x) - x).norm() == 0.0);
  MatrixElement ones(2, 2);
  ones.setOnes();
  MatrixElement expect(2, 2);
  expect << 1, 2, 1, 2;
  CHECK((right_act(diag2(1, 2), ones) - expect).norm() == 0.0);
}

TEST_CASE("left and right actions commute") {
  Rng rng(13);
  for (int it = 0; it < 25; ++it) {
    const int n = 2 + int(rng() % 3);
    const MatrixElement A = random_matrix(rng, n);
    const MatrixElement B = random_matrix(rng, n);
    const MatrixElement x = random_matrix(rng, n);
    const double resid =
        (left_act(A, right_act(B, x)) - right_act(B, left_act(A, x))).norm();
    CHECK(resid <= 1e-10 * operator_norm(A) * operator_norm(B) *
                       std::max(1.0, operator_norm(x)));
  }
}

TEST_CASE("normalized trace") {
  CHECK(normalized_trace(MatrixElement::Identity(2, 2), ctx2) ==
        Complex(1.0, 0.0));
  CHECK(normalized_trace(diag2(1, 0), ctx2) == Complex(0.5, 0.0));

  Rng rng(14);
  for (int it = 0; it < 25; ++it) {
    const MatrixElement A = random_matrix(rng, 2);
    const MatrixElement B = random_matrix(rng, 2);
    const Complex ab = normalized_trace(A * B, ctx2);
    const Complex ba = normalized_trace(B * A, ctx2);
    CHECK(std::abs(ab - ba) <= 1e-10 * operator_norm(A) * operator_norm(B));
  }
}

TEST_CASE("base conjugation is the adjoint map") {
  const AntilinearMap J = base_conjugation(ctx2);
  const MatrixElement id = MatrixElement::Identity(2, 2);
  CHECK((J.apply(id) - id).norm() == 0.0);

  const MatrixElement nil = matrix_unit(2, 0, 1);
  CHECK((J.apply(nil) - matrix_unit(2, 1, 0)).norm() == 0.0);

  MatrixElement m = MatrixElement::Zero(2, 2);
  m(0, 0) = Complex(0, 1);
  MatrixElement m_adj = MatrixElement::Zero(2, 2);
  m_adj(0, 0) = Complex(0, -1);
  CHECK((J.apply(m) - m_adj).norm() == 0.0);

  // J^2 = Id and J(A u_tr) = A^* u_tr
  Rng rng(15);
  for (int it = 0; it < 10; ++it) {
    const MatrixElement A = random_matrix(rng, 2);
    CHECK((J.apply(J.apply(A)) - A).norm() <= 1e-14 * A.norm());
    CHECK((J.apply(left_act(A, id)) - left_act(MatrixElement(A.adjoint()), id))
              .norm() <= 1e-14 * A.norm());
  }
}

TEST_CASE("vectorization and multiplication operators") {
  Rng rng(16);
  const int n = 3;
  const MatrixElement A = random_matrix(rng, n);
  const MatrixElement B = random_matrix(rng, n);
  const MatrixElement X = random_matrix(rng, n);

  CHECK((unvectorize(vectorize(X), n) - X).norm() == 0.0);
  CHECK((unvectorize(CVector(left_mult_operator(A) * vectorize(X)), n) - A * X)
            .norm() <= 1e-12 * A.norm() * X.norm());
  CHECK((unvectorize(CVector(right_mult_operator(B) * vectorize(X)), n) - X * B)
            .norm() <= 1e-12 * B.norm() * X.norm());
  CHECK((unvectorize(CVector(transpose_permutation(n) * vectorize(X)), n) -
         X.transpose())
            .norm() == 0.0);
}
