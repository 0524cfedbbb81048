#include "tomita/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tomita/modular_engine.hpp"

namespace tomita {

namespace {

constexpr double kRatioTol = 1e-9;  // relative dedup tolerance in linear space
const double kInf = std::numeric_limits<double>::infinity();

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

bool is_integral(double m) { return std::abs(m - std::lround(m)) <= 1e-9; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

bool is_infinite_type(FactorType t) {
  return t == FactorType::TypeI_inf || t == FactorType::TypeII_inf;
}

bool is_type_one(FactorType t) {
  return t == FactorType::TypeI_finite || t == FactorType::TypeI_inf;
}

std::string to_string(FactorType t) {
  switch (t) {
    case FactorType::TypeI_finite: return "TypeI_finite";
    case FactorType::TypeI_inf: return "TypeI_inf";
    case FactorType::TypeII_1: return "TypeII_1";
    case FactorType::TypeII_inf: return "TypeII_inf";
  }
  throw InvalidArgument("unknown factor type");
}

FactorType factor_type_from_string(const std::string& s) {
  if (s == "TypeI_finite") return FactorType::TypeI_finite;
  if (s == "TypeI_inf") return FactorType::TypeI_inf;
  if (s == "TypeII_1") return FactorType::TypeII_1;
  if (s == "TypeII_inf") return FactorType::TypeII_inf;
  throw ParseError("unknown factor type '" + s + "'");
}

SpectralData SpectralData::make(FactorType type,
                                std::vector<std::pair<double, double>> head,
                                std::optional<GeometricTail> tail) {
  for (auto& [mu, m] : head) {
    if (!(mu > 0.0) || !std::isfinite(mu))
      throw InvalidSpectralData("eigenvalue must be positive and finite");
    if (!(m > 0.0) || !std::isfinite(m))
      throw InvalidSpectralData("multiplicity must be positive and finite");
  }
  if (tail) {
    if (!(tail->start > 0.0) || !std::isfinite(tail->start))
      throw InvalidSpectralData("tail start must be positive and finite");
    if (!(tail->ratio > 0.0) || !(tail->ratio < 1.0))
      throw InvalidSpectralData("tail ratio must lie in (0, 1)");
    if (!(tail->mult > 0.0) || !std::isfinite(tail->mult))
      throw InvalidSpectralData("tail multiplicity must be positive and finite");
  }
  if (head.empty() && !tail) throw InvalidSpectralData("no spectral data given");

  if (is_infinite_type(type) && !tail)
    throw InvalidSpectralData(
        "infinite factor type requires a geometric tail (multiplicity sum "
        "must be infinite)");
  if (!is_infinite_type(type) && tail)
    throw InvalidSpectralData(
        "finite factor type cannot carry an infinite eigenvalue sequence");

  if (is_type_one(type)) {
    for (auto& [mu, m] : head) {
      if (!is_integral(m))
        throw InvalidSpectralData("type I multiplicities must be integers");
      m = double(std::lround(m));
    }
    if (tail && !is_integral(tail->mult))
      throw InvalidSpectralData("type I tail multiplicity must be an integer");
    if (tail) tail->mult = double(std::lround(tail->mult));
  }

  // canonical order: mu strictly decreasing, equal values merged
  std::sort(head.begin(), head.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<double, double>> merged;
  for (const auto& e : head) {
    if (!merged.empty() && close_rel(merged.back().first, e.first, kRatioTol))
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }

  if (tail && !merged.empty() && tail->start >= merged.back().first)
    throw InvalidSpectralData("tail must start strictly below the head");

  // absorb head entries that exactly extend the tail
  if (tail) {
    while (!merged.empty() &&
           close_rel(merged.back().first * tail->ratio, tail->start, kRatioTol) &&
           merged.back().second == tail->mult) {
      tail->start = merged.back().first;
      merged.pop_back();
    }
  }

  double total = 0.0;
  for (const auto& [mu, m] : merged) total += m * mu;
  if (tail) total += tail->mult * tail->start / (1.0 - tail->ratio);
  if (!(total > 0.0) || !std::isfinite(total))
    throw InvalidSpectralData("weighted eigenvalue sum is not positive finite");

  for (auto& [mu, m] : merged) mu /= total;
  if (tail) tail->start /= total;

  SpectralData s;
  s.type_ = type;
  s.head_ = std::move(merged);
  s.tail_ = tail;
  return s;
}

double SpectralData::weighted_sum() const {
  double total = 0.0;
  for (const auto& [mu, m] : head_) total += m * mu;
  if (tail_) total += tail_->mult * tail_->start / (1.0 - tail_->ratio);
  return total;
}

std::vector<std::pair<double, double>> SpectralData::expand(int count) const {
  std::vector<std::pair<double, double>> out;
  if (count <= 0) return out;
  for (const auto& e : head_) {
    if (int(out.size()) >= count) return out;
    out.push_back(e);
  }
  if (tail_) {
    for (int j = 0; int(out.size()) < count; ++j)
      out.emplace_back(tail_->start * std::pow(tail_->ratio, j), tail_->mult);
  }
  return out;
}

DeltaSpectrum delta_spectrum(const SpectralData& s, int cutoff) {
  if (cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
  const auto terms = s.expand(int(s.head().size()) + cutoff);

  std::vector<std::pair<double, double>> ratios;  // (lambda, weight m_k m_l)
  ratios.reserve(terms.size() * terms.size());
  for (const auto& [mu_k, m_k] : terms)
    for (const auto& [mu_l, m_l] : terms)
      ratios.emplace_back(mu_k / mu_l, m_k * m_l);
  std::sort(ratios.begin(), ratios.end());

  DeltaSpectrum out;
  out.cutoff_approximation = s.has_tail();
  const bool finite_mult = is_type_one(s.factor_type());
  for (const auto& [lambda, w] : ratios) {
    if (!out.entries.empty() &&
        close_rel(out.entries.back().first, lambda, kRatioTol)) {
      if (finite_mult) out.entries.back().second += w;
    } else {
      out.entries.emplace_back(lambda, finite_mult ? w : kInf);
    }
  }
  return out;
}

namespace {

void add_clause(AdmissibilityReport& r, const std::string& name, bool pass,
                const std::string& detail = "") {
  r.clauses.push_back({name, pass, detail});
}

void common_constraints(AdmissibilityReport& r, const SpectralData& c) {
  add_clause(r, "normalization", close_rel(c.weighted_sum(), 1.0, 1e-9),
             "sum m_k mu_k = " + fmt(c.weighted_sum()));
  if (is_type_one(c.factor_type())) {
    bool ok = true;
    for (const auto& [mu, m] : c.head()) ok = ok && is_integral(m);
    if (c.tail()) ok = ok && is_integral(c.tail()->mult);
    add_clause(r, "integral_multiplicities", ok);
  }
  if (is_infinite_type(c.factor_type()))
    add_clause(r, "infinite_multiplicity_sum", c.infinite_multiplicity_sum(),
               c.has_tail() ? "geometric tail present" : "finite sequence");
}

void match_explicit_target(AdmissibilityReport& r, const DeltaSpectrum& cand,
                           const DeltaSpectrum& target) {
  bool lambdas_ok = true;
  bool mults_ok = true;
  std::string detail;

  size_t i = 0, j = 0;
  while (i < cand.entries.size() && j < target.entries.size()) {
    const auto& [lc, nc] = cand.entries[i];
    const auto& [lt, nt] = target.entries[j];
    if (close_rel(lc, lt, kRatioTol)) {
      const bool both_inf = std::isinf(nc) && std::isinf(nt);
      if (!both_inf &&
          !(std::isfinite(nc) && std::isfinite(nt) &&
            std::abs(nc - nt) <= 1e-9 * std::max(1.0, nt))) {
        mults_ok = false;
        if (detail.empty())
          detail = "multiplicity at lambda = " + fmt(lt) + ": " + fmt(nc) +
                   " vs " + fmt(nt);
      }
      ++i;
      ++j;
    } else if (lc < lt) {
      lambdas_ok = false;
      if (detail.empty()) detail = "extra eigenvalue " + fmt(lc);
      ++i;
    } else {
      lambdas_ok = false;
      if (detail.empty()) detail = "missing eigenvalue " + fmt(lt);
      ++j;
    }
  }
  if (i < cand.entries.size()) {
    lambdas_ok = false;
    if (detail.empty())
      detail = "extra eigenvalue " + fmt(cand.entries[i].first);
  }
  if (j < target.entries.size()) {
    lambdas_ok = false;
    if (detail.empty())
      detail = "missing eigenvalue " + fmt(target.entries[j].first);
  }

  add_clause(r, "eigenvalue_match", lambdas_ok, lambdas_ok ? "" : detail);
  add_clause(r, "multiplicity_match", mults_ok, mults_ok ? "" : detail);
}

void match_lattice_target(AdmissibilityReport& r, const SpectralData& c,
                          const DeltaSpectrum& cand, const RatioLattice& lat) {
  if (!(lat.base > 1.0)) throw UnsupportedTarget("lattice base must be > 1");

  bool on_lattice = true;
  std::string detail;
  std::vector<long> exponents;
  for (const auto& [lambda, n] : cand.entries) {
    (void)n;
    const double e = std::log(lambda) / std::log(lat.base);
    const long k = std::lround(e);
    if (std::abs(e - double(k)) > 1e-9 * std::max(1.0, std::abs(e))) {
      on_lattice = false;
      if (detail.empty())
        detail = "ratio " + fmt(lambda) + " is not a lattice power";
    } else {
      exponents.push_back(k);
    }
  }
  add_clause(r, "lattice_membership", on_lattice, detail);

  // contiguous coverage from 1 upward; by the k <-> l symmetry the
  // negative side matches
  std::sort(exponents.begin(), exponents.end());
  long window = 0;
  while (std::binary_search(exponents.begin(), exponents.end(), window + 1))
    ++window;
  add_clause(r, "lattice_coverage", window >= 1,
             "contiguous exponent window +-" + std::to_string(window));

  // an exponent lattice is an infinite eigenvalue set: a finite sequence
  // can never produce it
  add_clause(r, "infinite_spectrum", c.has_tail(),
             c.has_tail() ? "" : "candidate has finitely many eigenvalues");

  // lattice multiplicities are all infinite; finite (type I) candidate
  // multiplicities cannot match them
  add_clause(r, "multiplicity_match", !is_type_one(c.factor_type()),
             is_type_one(c.factor_type())
                 ? "type I multiplicities are finite, lattice requires infinite"
                 : "");
}

}  // namespace

AdmissibilityReport is_admissible(const SpectralData& candidate,
                                  const ClassificationTarget& target,
                                  int cutoff) {
  AdmissibilityReport report;
  const DeltaSpectrum cand = delta_spectrum(candidate, cutoff);
  common_constraints(report, candidate);

  if (std::holds_alternative<RatioLattice>(target)) {
    report.within_cutoff_only = true;
    match_lattice_target(report, candidate, cand,
                         std::get<RatioLattice>(target));
  } else {
    const auto& t = std::get<DeltaSpectrum>(target);
    report.within_cutoff_only = cand.cutoff_approximation || t.cutoff_approximation;
    match_explicit_target(report, cand, t);
  }

  report.admissible = true;
  for (const auto& cl : report.clauses) report.admissible &= cl.pass;
  return report;
}

bool equivalent(const SpectralData& a, const SpectralData& b) {
  if (a.factor_type() != b.factor_type()) return false;
  if (a.head().size() != b.head().size()) return false;
  if (a.has_tail() != b.has_tail()) return false;

  // the scale constant, fixed by the largest eigenvalue of each
  double c;
  if (!a.head().empty())
    c = b.head()[0].first / a.head()[0].first;
  else
    c = b.tail()->start / a.tail()->start;

  for (size_t i = 0; i < a.head().size(); ++i) {
    const auto& [mu_a, m_a] = a.head()[i];
    const auto& [mu_b, m_b] = b.head()[i];
    if (!close_rel(c * mu_a, mu_b, kRatioTol)) return false;
    if (std::abs(m_a - m_b) > 1e-9 * std::max(1.0, m_b)) return false;
  }
  if (a.has_tail()) {
    const GeometricTail& ta = *a.tail();
    const GeometricTail& tb = *b.tail();
    if (!close_rel(ta.ratio, tb.ratio, kRatioTol)) return false;
    if (!close_rel(c * ta.start, tb.start, kRatioTol)) return false;
    if (std::abs(ta.mult - tb.mult) > 1e-9 * std::max(1.0, tb.mult))
      return false;
  }
  return true;
}

bool second_class_exists(const SpectralData& s) {
  // sum m_k / mu_k: a geometric tail inverts to ratio 1/r > 1, so the
  // series diverges whenever a tail is present; a finite head always
  // gives a finite sum
  return !s.has_tail();
}

double inverse_weighted_head_sum(const SpectralData& s) {
  double total = 0.0;
  for (const auto& [mu, m] : s.head()) total += m / mu;
  return total;
}

SpectralData permute_multiplicities(const SpectralData& s, int k, int l) {
  const int H = int(s.head().size());
  if (k < 0 || l < 0 || k >= H || l >= H || k == l)
    throw IndexOutOfHead("indices must name two distinct head entries");
  auto head = s.head();
  if (head[k].second == head[l].second)
    throw EqualMultiplicities("swap would be a no-op");
  std::swap(head[k].second, head[l].second);
  return SpectralData::make(s.factor_type(), std::move(head), s.tail());
}

SpectralData shift_multiplicity(const SpectralData& s, int k, int l,
                                double eps) {
  if (is_type_one(s.factor_type()))
    throw TypeIForbidden("type I multiplicities are integers");
  const int H = int(s.head().size());
  if (k < 0 || l < 0 || k >= H || l >= H || k == l)
    throw IndexOutOfHead("indices must name two distinct head entries");
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw InvalidArgument("eps must be positive");
  if (eps >= s.head()[l].second)
    throw EpsTooLarge("eps must stay below the donor multiplicity");
  auto head = s.head();
  head[k].second += eps;
  head[l].second -= eps;
  return SpectralData::make(s.factor_type(), std::move(head), s.tail());
}

namespace {

// exponent subsets {0 = e_0 > e_1 > ...} within the given depth, in
// lexicographic order of the exponent sequences
std::vector<std::vector<long>> exponent_subsets(int depth) {
  std::vector<std::vector<long>> out;
  const int extra = depth - 1;  // exponents -1 .. -(depth-1)
  for (unsigned mask = 0; mask < (1u << extra); ++mask) {
    std::vector<long> exps{0};
    for (int b = 0; b < extra; ++b)
      if (mask & (1u << b)) exps.push_back(-(b + 1));
    std::sort(exps.rbegin(), exps.rend());
    out.push_back(std::move(exps));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<long>& a, const std::vector<long>& b) {
              return std::lexicographical_compare(
                  a.begin(), a.end(), b.begin(), b.end(),
                  [](long x, long y) { return x > y; });
            });
  return out;
}

std::vector<SpectralData> enumerate_lattice(const RatioLattice& lat,
                                            FactorType type,
                                            const EnumerationBounds& bounds) {
  std::vector<SpectralData> classes;
  if (!is_infinite_type(type) || is_type_one(type)) return classes;

  const ClassificationTarget target = lat;
  for (const auto& exps : exponent_subsets(bounds.max_head)) {
    // the geometric tail continues the last head gap
    const long step = exps.size() >= 2 ? exps[exps.size() - 2] - exps.back() : 1;
    std::vector<std::pair<double, double>> head;
    for (long e : exps) head.emplace_back(std::pow(lat.base, double(e)), 1.0);
    GeometricTail tail;
    tail.ratio = std::pow(lat.base, -double(step));
    tail.start = std::pow(lat.base, double(exps.back() - step));
    tail.mult = 1.0;

    SpectralData cand = SpectralData::make(type, std::move(head), tail);
    if (!is_admissible(cand, target, bounds.cutoff).admissible) continue;
    bool fresh = true;
    for (const auto& kept : classes) fresh &= !equivalent(kept, cand);
    if (fresh) classes.push_back(std::move(cand));
  }
  return classes;
}

std::vector<SpectralData> enumerate_grid(const DeltaSpectrum& target,
                                         FactorType type,
                                         const EnumerationBounds& bounds) {
  if (bounds.mu_grid.empty())
    throw UnsupportedTarget(
        "explicit targets need a mu grid to search over");
  std::vector<SpectralData> classes;
  if (is_infinite_type(type)) return classes;  // tails never match a finite set

  std::vector<double> grid = bounds.mu_grid;
  std::sort(grid.rbegin(), grid.rend());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) {
                           return close_rel(a, b, kRatioTol);
                         }),
             grid.end());
  for (double g : grid)
    if (!(g > 0.0)) throw UnsupportedTarget("mu grid values must be positive");

  const int G = int(grid.size());
  if (G > 20) throw UnsupportedTarget("mu grid too large to search");
  const int max_head = std::max(1, bounds.max_head);
  const int max_mult = std::max(1, bounds.max_multiplicity);
  const ClassificationTarget tv = target;

  // subsets in lexicographic order of their descending mu tuples, then
  // multiplicity tuples
  std::vector<std::vector<double>> subsets;
  for (unsigned mask = 1; mask < (1u << G); ++mask) {
    std::vector<double> mus;
    for (int b = 0; b < G; ++b)
      if (mask & (1u << b)) mus.push_back(grid[b]);
    if (int(mus.size()) <= max_head) subsets.push_back(std::move(mus));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<double>& a, const std::vector<double>& b) {
              return std::lexicographical_compare(
                  a.begin(), a.end(), b.begin(), b.end(),
                  [](double x, double y) { return x > y; });
            });

  for (const auto& mus : subsets) {
    std::vector<int> mult(mus.size(), 1);
    while (true) {
      std::vector<std::pair<double, double>> head;
      for (size_t i = 0; i < mus.size(); ++i)
        head.emplace_back(mus[i], double(mult[i]));
      SpectralData cand = SpectralData::make(type, std::move(head));
      if (is_admissible(cand, tv, bounds.cutoff).admissible) {
        bool fresh = true;
        for (const auto& kept : classes) fresh &= !equivalent(kept, cand);
        if (fresh) classes.push_back(std::move(cand));
      }

      // next multiplicity tuple
      int pos = int(mult.size()) - 1;
      while (pos >= 0 && mult[pos] == max_mult) mult[pos--] = 1;
      if (pos < 0) break;
      ++mult[pos];
    }
  }
  return classes;
}

}  // namespace

std::vector<SpectralData> enumerate_classes(const ClassificationTarget& target,
                                            FactorType type,
                                            const EnumerationBounds& bounds) {
  if (bounds.max_head < 1 || bounds.max_head > 24)
    throw InvalidArgument("max_head out of range");
  if (std::holds_alternative<RatioLattice>(target))
    return enumerate_lattice(std::get<RatioLattice>(target), type, bounds);
  return enumerate_grid(std::get<DeltaSpectrum>(target), type, bounds);
}

CrossCheckReport cross_check_finite(const SpectralData& s,
                                    const FactorContext& ctx) {
  if (s.factor_type() != FactorType::TypeI_finite || s.has_tail())
    throw InvalidSpectralData("cross check needs finite type I data");
  double dim = 0.0;
  for (const auto& [mu, m] : s.head()) dim += m;
  const int n = int(std::lround(dim));
  if (n > 8) throw DimensionTooLarge("total dimension " + std::to_string(n));

  // H0 = diag(mu_k with multiplicity m_k), modular engine run on H0^{1/2}
  MatrixElement H0 = MatrixElement::Zero(n, n);
  {
    int pos = 0;
    for (const auto& [mu, m] : s.head())
      for (long j = 0; j < std::lround(m); ++j) H0(pos, pos) = mu, ++pos;
  }
  const FactorContext model_ctx(n, ctx.tol, ctx.cond_limit);
  const MatrixElement T = hermitian_sqrt(H0, model_ctx.tol);
  const ModularObjects mo = make_modular_objects(T, model_ctx);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(mo.Delta0));
  const Eigen::VectorXd observed = es.eigenvalues();

  const DeltaSpectrum expected = delta_spectrum(s, 1);

  CrossCheckReport report;
  report.entries.reserve(expected.entries.size());
  for (const auto& [lambda, nj] : expected.entries)
    report.entries.push_back({lambda, nj, 0, 0.0});

  bool assigned_all = true;
  for (Eigen::Index i = 0; i < observed.size(); ++i) {
    // nearest expected eigenvalue
    size_t best = 0;
    double best_dist = kInf;
    for (size_t j = 0; j < report.entries.size(); ++j) {
      const double d = std::abs(observed(i) - report.entries[j].lambda);
      if (d < best_dist) best_dist = d, best = j;
    }
    auto& entry = report.entries[best];
    const double resid = best_dist / entry.lambda;
    entry.eigenvalue_residual = std::max(entry.eigenvalue_residual, resid);
    report.max_eigenvalue_residual =
        std::max(report.max_eigenvalue_residual, resid);
    if (resid <= 1e-6)
      ++entry.observed_multiplicity;
    else
      assigned_all = false;
  }

  report.multiplicities_match = assigned_all;
  for (const auto& e : report.entries)
    report.multiplicities_match &=
        (double(e.observed_multiplicity) == e.expected_multiplicity);
  report.pass = report.multiplicities_match &&
                report.max_eigenvalue_residual <= std::max(ctx.tol, 1e-10);
  return report;
}

}  // namespace tomita
