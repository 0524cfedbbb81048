#pragma once

#include "tomita/errors.hpp"

namespace tomita {

// Fixes the standard-form model M_n(C): matrix dimension, numerical
// tolerance, and the condition-number gate for invertible inputs.
struct FactorContext {
  int n = 2;
  double tol = 1e-10;
  double cond_limit = 1e3;

  FactorContext() = default;

  explicit FactorContext(int n_, double tol_ = 1e-10, double cond_limit_ = 1e3)
      : n(n_), tol(tol_), cond_limit(cond_limit_) {
    if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
    if (!(tol > 0.0)) throw InvalidArgument("tol must be > 0");
    if (!(cond_limit >= 1.0)) throw InvalidArgument("cond_limit must be >= 1");
  }
};

}  // namespace tomita
