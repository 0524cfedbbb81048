#pragma once

// Definitional oracles used to cross-check the library predicates: the
// span dimensions of {A u} over the algebra basis and of {u B} over the
// commutant basis, computed by brute-force rank. Kept independent of the
// singular-value shortcuts in the library.

#include <Eigen/Dense>

#include "tomita/block_factor.hpp"
#include "tomita/finite_factor.hpp"

namespace tomita::testing {

inline int rank_with_tol(const Eigen::MatrixXcd& S, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

// dim span{ E_ab u : a, b } under the left action
inline int left_span_dimension(const MatrixElement& u, double tol) {
  const int n = int(u.rows());
  Eigen::MatrixXcd S(n * n, n * n);
  int col = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      S.col(col++) = vectorize(left_act(matrix_unit(n, a, b), u));
  return rank_with_tol(S, tol);
}

// dim span{ u E_ab : a, b } under the right (commutant) action
inline int right_span_dimension(const MatrixElement& u, double tol) {
  const int n = int(u.rows());
  Eigen::MatrixXcd S(n * n, n * n);
  int col = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      S.col(col++) = vectorize(right_act(matrix_unit(n, a, b), u));
  return rank_with_tol(S, tol);
}

// Same oracles for the truncated block model, over the full matrix-unit
// basis of the flattened algebra / commutant.
inline int block_left_span_dimension(const BlockVector& u, double tol) {
  const Eigen::MatrixXcd U = flatten(u);
  const int d = int(U.rows());
  Eigen::MatrixXcd S(d * d, d * d);
  int col = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(d, d);
      E(a, b) = 1.0;
      S.col(col++) = Eigen::Map<const Eigen::VectorXcd>((E * U).eval().data(),
                                                        d * d);
    }
  return rank_with_tol(S, tol);
}

inline int block_right_span_dimension(const BlockVector& u, double tol) {
  const Eigen::MatrixXcd U = flatten(u);
  const int d = int(U.rows());
  Eigen::MatrixXcd S(d * d, d * d);
  int col = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(d, d);
      E(a, b) = 1.0;
      S.col(col++) = Eigen::Map<const Eigen::VectorXcd>((U * E).eval().data(),
                                                        d * d);
    }
  return rank_with_tol(S, tol);
}

}  // namespace tomita::testing
