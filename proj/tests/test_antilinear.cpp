#include <doctest.h>

#include "tomita/antilinear.hpp"
#include "tomita/finite_factor.hpp"
#include "tomita/random.hpp"

using namespace tomita;

namespace {

CVector random_vec(Rng& rng, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("application is conjugate linear") {
  Rng rng(21);
  const int n = 3;
  const AntilinearMap a(random_matrix(rng, n * n));
  for (int it = 0; it < 20; ++it) {
    const CVector x = random_vec(rng, n * n);
    const CVector y = random_vec(rng, n * n);
    const Complex alpha(0.3 + double(it), -1.25);
    const CVector lhs = a.apply(CVector(alpha * x + y));
    const CVector rhs = std::conj(alpha) * a.apply(x) + a.apply(y);
    CHECK((lhs - rhs).norm() <= 1e-11 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("composition rules") {
  Rng rng(22);
  const int n = 2;
  const AntilinearMap a(random_matrix(rng, n * n));
  const AntilinearMap b(random_matrix(rng, n * n));
  const Eigen::MatrixXcd m = random_matrix(rng, n * n);
  const CVector x = random_vec(rng, n * n);

  // antilinear after antilinear is linear
  const Eigen::MatrixXcd ab = compose(a, b);
  CHECK((ab * x - a.apply(b.apply(x))).norm() <= 1e-12 * x.norm() * 100);

  CHECK((compose(a, m).apply(x) - a.apply(CVector(m * x))).norm() <=
        1e-12 * x.norm() * 100);
  CHECK((compose(m, a).apply(x) - m * a.apply(x)).norm() <=
        1e-12 * x.norm() * 100);
}

TEST_CASE("adjoint convention") {
  Rng rng(23);
  const int n = 3;
  const FactorContext ctx(n);
  const AntilinearMap a(random_matrix(rng, n * n));
  const AntilinearMap ad = adjoint(a);
  for (int it = 0; it < 10; ++it) {
    const MatrixElement X = random_matrix(rng, n);
    const MatrixElement Y = random_matrix(rng, n);
    // <adj(a) x, y> = conj(<x, a y>) in the model inner product
    const Complex lhs = inner_product(ad.apply(X), Y, ctx);
    const Complex rhs = std::conj(inner_product(X, a.apply(Y), ctx));
    CHECK(std::abs(lhs - rhs) <= 1e-11);
  }
}
