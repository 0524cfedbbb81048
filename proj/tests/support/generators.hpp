#pragma once

// Seeded generators for the classification property sweeps. Eigenvalues
// are drawn well separated (ratio gaps >= 1.3) so ratio clusters never
// straddle the dedup tolerance.

#include <utility>
#include <vector>

#include "tomita/random.hpp"
#include "tomita/spectral.hpp"

namespace tomita::testing {

inline std::vector<double> descending_mus(Rng& rng, int count,
                                          double top = 1.0) {
  std::uniform_real_distribution<double> gap(1.3, 6.0);
  std::vector<double> mus;
  double mu = top;
  for (int i = 0; i < count; ++i) {
    mus.push_back(mu);
    mu /= gap(rng);
  }
  return mus;
}

inline SpectralData random_infinite_data(Rng& rng, bool type_one) {
  std::uniform_int_distribution<int> head_len(0, 4);
  std::uniform_int_distribution<int> int_mult(1, 3);
  std::uniform_real_distribution<double> real_mult(0.25, 3.0);
  std::uniform_real_distribution<double> ratio(0.05, 0.75);

  const int H = head_len(rng);
  const auto mus = descending_mus(rng, H + 1);
  std::vector<std::pair<double, double>> head;
  for (int i = 0; i < H; ++i)
    head.emplace_back(mus[i],
                      type_one ? double(int_mult(rng)) : real_mult(rng));
  GeometricTail tail;
  tail.ratio = ratio(rng);
  tail.start = mus.back() * ratio(rng);
  tail.mult = type_one ? double(int_mult(rng)) : real_mult(rng);
  return SpectralData::make(
      type_one ? FactorType::TypeI_inf : FactorType::TypeII_inf,
      std::move(head), tail);
}

inline SpectralData random_finite_data(Rng& rng, bool type_one) {
  std::uniform_int_distribution<int> head_len(1, 4);
  std::uniform_int_distribution<int> int_mult(1, 2);
  std::uniform_real_distribution<double> real_mult(0.25, 3.0);

  const int H = head_len(rng);
  const auto mus = descending_mus(rng, H);
  std::vector<std::pair<double, double>> head;
  for (int i = 0; i < H; ++i)
    head.emplace_back(mus[i],
                      type_one ? double(int_mult(rng)) : real_mult(rng));
  return SpectralData::make(
      type_one ? FactorType::TypeI_finite : FactorType::TypeII_1,
      std::move(head));
}

// finite type I data with sum(m_k) <= dim_cap, suitable for the matrix
// cross-check
inline SpectralData random_crosscheck_data(Rng& rng, int dim_cap = 8) {
  std::uniform_int_distribution<int> head_len(1, 4);
  const int H = head_len(rng);
  const auto mus = descending_mus(rng, H);
  std::vector<std::pair<double, double>> head;
  int budget = dim_cap;
  for (int i = 0; i < H; ++i) {
    const int slots = budget - (H - 1 - i);  // leave room for the rest
    std::uniform_int_distribution<int> mult(1, std::max(1, std::min(3, slots)));
    const int m = mult(rng);
    head.emplace_back(mus[i], double(m));
    budget -= m;
  }
  return SpectralData::make(FactorType::TypeI_finite, std::move(head));
}

}  // namespace tomita::testing
