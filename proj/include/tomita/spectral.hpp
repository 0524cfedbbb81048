#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tomita/context.hpp"

namespace tomita {

enum class FactorType { TypeI_finite, TypeI_inf, TypeII_1, TypeII_inf };

bool is_infinite_type(FactorType t);
bool is_type_one(FactorType t);
std::string to_string(FactorType t);
FactorType factor_type_from_string(const std::string& s);

// Geometric continuation of the eigenvalue sequence: terms
// start * ratio^j, j = 0, 1, 2, ..., each with multiplicity mult.
struct GeometricTail {
  double start = 0.0;
  double ratio = 0.0;
  double mult = 0.0;
};

// Eigenvalue/multiplicity data (mu_k, m_k) of a positive operator with
// pure point spectrum; the classification currency for solutions of the
// inverse problem.
//
// Stored canonically: mu strictly decreasing with equal values merged,
// trailing head entries that exactly extend the tail absorbed into it,
// and the whole sequence rescaled to sum(m_k mu_k) = 1. Infinite factor
// types require a tail (so sum(m_k) = inf is decidable), finite types
// forbid one. Type I data must have integer multiplicities.
class SpectralData {
public:
  static SpectralData make(FactorType type,
                           std::vector<std::pair<double, double>> head,
                           std::optional<GeometricTail> tail = std::nullopt);

  FactorType factor_type() const { return type_; }
  const std::vector<std::pair<double, double>>& head() const { return head_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }
  bool has_tail() const { return tail_.has_value(); }

  // sum over head and tail of m_k mu_k, exact for the geometric part
  double weighted_sum() const;

  // sum(m_k) = inf exactly when a tail is present
  bool infinite_multiplicity_sum() const { return has_tail(); }

  // 0 is an accumulation point of the eigenvalues iff the sequence is
  // infinite
  bool zero_in_spectrum_closure() const { return has_tail(); }

  // first `count` (mu_k, m_k) pairs, head first, then tail terms
  std::vector<std::pair<double, double>> expand(int count) const;

private:
  SpectralData() = default;

  FactorType type_ = FactorType::TypeI_finite;
  std::vector<std::pair<double, double>> head_;
  std::optional<GeometricTail> tail_;
};

// Ratio spectrum of the modular operator: (lambda_j, n_j) pairs with
// n_j = +inf for type II data. Sorted ascending in lambda, contains 1,
// closed under inversion.
struct DeltaSpectrum {
  std::vector<std::pair<double, double>> entries;
  // true when built from tail-bearing data: the entries are a cutoff
  // approximation of an infinite ratio set
  bool cutoff_approximation = false;
};

// Target spectrum { base^k : k in Z } with every multiplicity infinite.
struct RatioLattice {
  double base = 10.0;
};

using ClassificationTarget = std::variant<DeltaSpectrum, RatioLattice>;

// All pairwise ratios mu_k / mu_l of the (cutoff-expanded) eigenvalue
// sequence, deduplicated with relative tolerance; type I multiplicities
// are the sums of products m_k m_l over coinciding ratios.
DeltaSpectrum delta_spectrum(const SpectralData& s, int cutoff);

struct AdmissibilityClause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AdmissibilityReport {
  bool admissible = false;
  // lattice targets and tail-bearing candidates can only be checked up
  // to the expansion cutoff
  bool within_cutoff_only = false;
  std::vector<AdmissibilityClause> clauses;
};

AdmissibilityReport is_admissible(const SpectralData& candidate,
                                  const ClassificationTarget& target,
                                  int cutoff);

// Same eigenvalue sequence up to a positive constant with the same
// multiplicities. Requires equal factor types.
bool equivalent(const SpectralData& a, const SpectralData& b);

// Whether sum(m_k / mu_k) converges, i.e. whether the inverse of the
// modular operator is again a modular operator. A geometric tail makes
// the inverse series diverge, so any data with infinite multiplicity
// sum yields false.
bool second_class_exists(const SpectralData& s);

// The finite sum sum(m_k / mu_k) over the head.
double inverse_weighted_head_sum(const SpectralData& s);

// Swap m_k and m_l (head indices, zero-based) and renormalize. The
// result stays admissible for the same target and is inequivalent.
SpectralData permute_multiplicities(const SpectralData& s, int k, int l);

// m_k += eps, m_l -= eps (type II only) and renormalize.
SpectralData shift_multiplicity(const SpectralData& s, int k, int l,
                                double eps);

struct EnumerationBounds {
  // exponent depth for lattice targets / head size bound
  int max_head = 8;
  // type I multiplicity search bound for explicit targets
  int max_multiplicity = 3;
  int cutoff = 40;
  // candidate mu values for explicit targets; required there
  std::vector<double> mu_grid;
};

// Pairwise-inequivalent admissible data within the bounds, in a
// deterministic (lexicographic) order.
std::vector<SpectralData> enumerate_classes(const ClassificationTarget& target,
                                            FactorType type,
                                            const EnumerationBounds& bounds);

struct CrossCheckEntry {
  double lambda = 0.0;
  double expected_multiplicity = 0.0;
  int observed_multiplicity = 0;
  double eigenvalue_residual = 0.0;
};

struct CrossCheckReport {
  bool pass = false;
  double max_eigenvalue_residual = 0.0;
  bool multiplicities_match = false;
  std::vector<CrossCheckEntry> entries;
};

// Builds H0 = diag(mu_k with multiplicity m_k) in the matrix model, runs
// the modular engine on T = H0^{1/2}, and compares the eigenvalues of
// Delta0 with the ratio-spectrum arithmetic. Finite type I data with
// sum(m_k) <= 8 only.
CrossCheckReport cross_check_finite(const SpectralData& s,
                                    const FactorContext& ctx);

}  // namespace tomita
