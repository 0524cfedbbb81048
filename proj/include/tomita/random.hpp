#pragma once

#include <cstdint>
#include <random>

#include "tomita/linalg.hpp"

namespace tomita {

using Rng = std::mt19937_64;

// iid standard complex Gaussian entries
MatrixElement random_matrix(Rng& rng, int n);

// Haar-like unitary: QR of a Gaussian matrix with the R diagonal phases
// absorbed into Q
MatrixElement random_unitary(Rng& rng, int n);

// U diag(s) W^* with log-uniform singular values spanning exactly the
// requested condition number (cond >= 1)
MatrixElement random_invertible(Rng& rng, int n, double cond);

// same construction with n - rank singular values set to exactly zero
MatrixElement random_rank_deficient(Rng& rng, int n, int rank);

}  // namespace tomita
