#pragma once

// Modular data (S, T): validation, fusion rules from the Verlinde formula,
// characters, invertibles, Müger centralizers, and the checks relating the
// universal grading and central series to centralizers.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/group.hpp"
#include "fusionkit/module.hpp"
#include "fusionkit/ring.hpp"
#include "fusionkit/series.hpp"

namespace fusionkit {

using Complex = std::complex<double>;

inline constexpr double kModularTolerance = 1e-8;

/// The Verlinde sums are not within tolerance of nonnegative integers, or do
/// not form a fusion ring.
class NotModularError : public std::runtime_error {
 public:
  NotModularError(const std::string& what, std::vector<int> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

/// Unnormalized S (s_00 = 1) and twists θ_i.
class ModularData {
 public:
  ModularData() = default;

  static ModularData make(int rank, std::vector<int> dual, std::vector<Complex> s,
                          std::vector<Complex> theta, std::vector<std::string> labels = {},
                          double tolerance = kModularTolerance) {
    if (rank <= 0) throw StructuralError("rank must be positive");
    if (static_cast<int>(dual.size()) != rank)
      throw StructuralError(detail::concat("dual has length ", dual.size(), ", expected ", rank));
    for (int i = 0; i < rank; ++i)
      if (dual[i] < 0 || dual[i] >= rank)
        throw StructuralError(detail::concat("dual[", i, "] = ", dual[i], " out of range"));
    if (s.size() != static_cast<std::size_t>(rank) * rank)
      throw StructuralError(detail::concat("S has ", s.size(), " entries, expected ", rank * rank));
    if (static_cast<int>(theta.size()) != rank)
      throw StructuralError(detail::concat("T has length ", theta.size(), ", expected ", rank));
    if (labels.empty())
      for (int i = 0; i < rank; ++i) labels.push_back(std::to_string(i));
    if (static_cast<int>(labels.size()) != rank)
      throw StructuralError(detail::concat("labels has length ", labels.size(), ", expected ", rank));
    if (!(tolerance > 0)) throw PreconditionError("tolerance must be positive");
    for (const auto& z : s)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw StructuralError("S has a non-finite entry");
    for (const auto& z : theta)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw StructuralError("T has a non-finite entry");
    ModularData md;
    md.rank_ = rank;
    md.dual_ = std::move(dual);
    md.s_ = std::move(s);
    md.theta_ = std::move(theta);
    md.labels_ = std::move(labels);
    md.tolerance_ = tolerance;
    for (int i = 0; i < rank; ++i) md.global_dim_ += md.d(i) * md.d(i);
    return md;
  }

  int rank() const { return rank_; }
  int dual(int i) const { return dual_[i]; }
  const std::vector<int>& duals() const { return dual_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Complex s(int i, int j) const { return s_[static_cast<std::size_t>(i) * rank_ + j]; }
  Complex theta(int i) const { return theta_[i]; }
  const std::vector<Complex>& twists() const { return theta_; }
  double d(int i) const { return s_[i].real(); }
  double global_dim() const { return global_dim_; }
  double tolerance() const { return tolerance_; }
  /// Absolute tolerance for comparisons of S-sized quantities.
  double scaled_tolerance() const { return tolerance_ * global_dim_; }

  ModularData with_tolerance(double tol) const {
    auto copy = *this;
    copy.tolerance_ = tol;
    return copy;
  }

 private:
  int rank_ = 0;
  std::vector<int> dual_;
  std::vector<Complex> s_;
  std::vector<Complex> theta_;
  std::vector<std::string> labels_;
  double tolerance_ = kModularTolerance;
  double global_dim_ = 0.0;
};

struct VerlindeResult {
  FusionRing ring;
  double residual = 0.0;  // worst distance of a pre-rounding sum to its integer
};

/// N_il^j = (1/D) Σ_k s_ik s_lk conj(s_jk) / d_k.
inline VerlindeResult verlinde_fusion(const ModularData& md) {
  const int r = md.rank();
  const double D = md.global_dim();
  for (int k = 0; k < r; ++k)
    if (!(md.d(k) > 0))
      throw NotModularError(detail::concat("d_", k, " is not positive"), {k});
  VerlindeResult out;
  std::vector<Entry> entries;
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < r; ++l)
      for (int j = 0; j < r; ++j) {
        Complex sum = 0.0;
        for (int k = 0; k < r; ++k) sum += md.s(i, k) * md.s(l, k) * std::conj(md.s(j, k)) / md.d(k);
        sum /= D;
        const double n = std::round(sum.real());
        const double dev = std::abs(sum - Complex(n, 0.0));
        out.residual = std::max(out.residual, dev);
        if (dev > md.tolerance() || n < 0)
          throw NotModularError(detail::concat("Verlinde sum at ", detail::tuple_string({i, l, j}),
                                               " = (", sum.real(), ", ", sum.imag(),
                                               ") is not a nonnegative integer"),
                                {i, l, j});
        if (n > 0) entries.push_back({i, l, j, static_cast<long long>(n)});
      }
  try {
    out.ring = FusionRing::make(r, md.duals(), std::move(entries), md.labels());
  } catch (const StructuralError& e) {
    throw NotModularError(std::string("Verlinde ring is malformed: ") + e.what(), {});
  }
  auto rep = validate_ring(out.ring);
  if (!rep.passed())
    throw NotModularError("Verlinde ring violates " + rep.violations[0].axiom,
                          rep.violations[0].witness);
  return out;
}

namespace detail {

/// Tracks the lexicographically first witness over a tolerance and the worst
/// deviation overall.
struct WorstTracker {
  std::string axiom;
  double tol;
  std::vector<int> witness;
  double worst = 0.0;

  void see(double dev, std::vector<int> at) {
    worst = std::max(worst, dev);
    if (dev > tol && witness.empty()) witness = std::move(at);
  }
  void flush(ValidationReport& rep, const std::string& what) const {
    if (!witness.empty()) rep.violations.push_back({axiom, witness, what, worst});
  }
};

}  // namespace detail

struct BalancingReport {
  double worst = 0.0;
  std::optional<std::vector<int>> witness;  // first (i, j) over tolerance
  bool passed = true;
};

/// s_ij = θ_i⁻¹ θ_j⁻¹ Σ_k N_{i*j}^k θ_k d_k.
inline BalancingReport balancing_check(const ModularData& md, const FusionRing& ring) {
  if (ring.rank() != md.rank()) throw PreconditionError("balancing_check: rank mismatch");
  BalancingReport rep;
  const double tol = md.scaled_tolerance();
  for (int i = 0; i < md.rank(); ++i)
    for (int j = 0; j < md.rank(); ++j) {
      Complex sum = 0.0;
      for (const auto& t : ring.product(ring.dual(i), j))
        sum += static_cast<double>(t.mult) * md.theta(t.index) * md.d(t.index);
      const Complex rhs = sum / (md.theta(i) * md.theta(j));
      const double dev = std::abs(md.s(i, j) - rhs);
      rep.worst = std::max(rep.worst, dev);
      if (dev > tol && !rep.witness) rep.witness = std::vector<int>{i, j};
    }
  rep.passed = !rep.witness.has_value();
  return rep;
}

inline ValidationReport validate_modular(const ModularData& md) {
  ValidationReport rep;
  const int r = md.rank();
  const double tol = md.scaled_tolerance();
  const double D = md.global_dim();

  {
    std::vector<int> w;
    for (int i = 0; i < r && w.empty(); ++i)
      if (md.dual(md.dual(i)) != i) w = {i};
    if (w.empty() && md.dual(0) != 0) w = {0};
    if (!w.empty()) rep.violations.push_back({"dual_involution", w, "dual is not an involution fixing 0", 0});
  }
  {
    detail::WorstTracker unit{"unit_dimension", md.tolerance(), {}, 0};
    unit.see(std::abs(md.s(0, 0) - Complex(1, 0)), {0, 0});
    unit.flush(rep, "s_00 != 1");
    detail::WorstTracker pu{"pseudounitary", tol, {}, 0};
    for (int i = 0; i < r; ++i)
      pu.see(md.d(i) > 0 ? std::abs(md.s(0, i).imag()) : 1.0 + std::abs(md.d(i)) + tol, {i});
    pu.flush(rep, "s_0i is not a positive real");
  }
  {
    detail::WorstTracker sym{"symmetry", tol, {}, 0};
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sym.see(std::abs(md.s(i, j) - md.s(j, i)), {i, j});
    sym.flush(rep, "s_ij != s_ji");
  }
  {
    detail::WorstTracker du{"duality", tol, {}, 0};
    const bool dual_ok = !rep.violates("dual_involution");
    for (int i = 0; i < r && dual_ok; ++i)
      for (int j = 0; j < r; ++j) {
        const double a = std::abs(md.s(i, j) - md.s(md.dual(i), md.dual(j)));
        const double b = std::abs(md.s(i, md.dual(j)) - std::conj(md.s(i, j)));
        du.see(std::max(a, b), {i, j});
      }
    du.flush(rep, "s_ij != s_{i*j*} or s_{ij*} != conj(s_ij)");
  }
  {
    detail::WorstTracker orth{"orthogonality", tol, {}, 0};
    for (int i = 0; i < r; ++i)
      for (int l = 0; l < r; ++l) {
        Complex sum = 0.0;
        for (int j = 0; j < r; ++j) sum += md.s(i, j) * md.s(j, l);
        const double want = (md.dual(i) == l) ? D : 0.0;
        orth.see(std::abs(sum - Complex(want, 0.0)), {i, l});
      }
    orth.flush(rep, "Σ_j s_ij s_jl != δ_{i*l} D");
    detail::WorstTracker norm{"row_norm", tol, {}, 0};
    for (int j = 0; j < r; ++j) {
      double sum = 0.0;
      for (int i = 0; i < r; ++i) sum += std::norm(md.s(i, j));
      norm.see(std::abs(sum - D), {j});
    }
    norm.flush(rep, "Σ_i |s_ij|² != D");
  }
  {
    detail::WorstTracker mod{"twist_modulus", md.tolerance(), {}, 0};
    for (int i = 0; i < r; ++i) mod.see(std::abs(std::abs(md.theta(i)) - 1.0), {i});
    mod.flush(rep, "|θ_i| != 1");
    detail::WorstTracker unit{"twist_unit", md.tolerance(), {}, 0};
    unit.see(std::abs(md.theta(0) - Complex(1, 0)), {0});
    unit.flush(rep, "θ_0 != 1");
  }
  if (rep.passed()) {
    try {
      auto v = verlinde_fusion(md);
      auto bal = balancing_check(md, v.ring);
      if (!bal.passed)
        rep.violations.push_back({"balancing", *bal.witness,
                                  "s_ij != θ_i⁻¹ θ_j⁻¹ Σ_k N_{i*j}^k θ_k d_k", bal.worst});
    } catch (const NotModularError& e) {
      rep.violations.push_back({"verlinde_integrality", e.witness(), e.what(), 0});
    }
  }
  return rep;
}

/// h_j(X_i) = s_ij / s_0j, indexed [i][j].
inline std::vector<std::vector<Complex>> ring_characters(const ModularData& md) {
  std::vector<std::vector<Complex>> h(md.rank(), std::vector<Complex>(md.rank()));
  for (int i = 0; i < md.rank(); ++i)
    for (int j = 0; j < md.rank(); ++j) {
      if (!(md.d(j) > 0)) throw PreconditionError("ring_characters: nonpositive dimension");
      h[i][j] = md.s(i, j) / md.d(j);
    }
  return h;
}

/// Worst deviation of h_j(X_i) h_j(X_l) from Σ_m N_il^m h_j(X_m) over all i, l, j.
inline double character_homomorphism_residual(const FusionRing& ring,
                                              const std::vector<std::vector<Complex>>& h) {
  double worst = 0.0;
  const int r = ring.rank();
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      for (int l = 0; l < r; ++l) {
        Complex rhs = 0.0;
        for (const auto& t : ring.product(i, l)) rhs += static_cast<double>(t.mult) * h[t.index][j];
        worst = std::max(worst, std::abs(h[i][j] * h[l][j] - rhs));
      }
  return worst;
}

struct InvertibleData {
  std::vector<int> indices;
  GroupTable group;  // on positions in `indices`
};

/// {j : |s_ij| = d_i d_j for all i}, cross-checked against the invertible
/// basics of the fusion ring.
inline InvertibleData invertibles_from_smatrix(const ModularData& md, const FusionRing& ring) {
  const double tol = md.scaled_tolerance();
  InvertibleData out;
  for (int j = 0; j < md.rank(); ++j) {
    bool inv = true;
    for (int i = 0; i < md.rank() && inv; ++i)
      if (std::abs(std::abs(md.s(i, j)) - md.d(i) * md.d(j)) > tol) inv = false;
    if (inv) out.indices.push_back(j);
  }
  if (out.indices != invertible_basics(ring))
    throw InvariantViolation("invertibles detected from S disagree with the fusion ring");
  const int n = static_cast<int>(out.indices.size());
  std::vector<int> pos(md.rank(), -1);
  for (int a = 0; a < n; ++a) pos[out.indices[a]] = a;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto p = ring.product(out.indices[a], out.indices[b]);
      if (p.size() != 1 || p[0].mult != 1 || pos[p[0].index] < 0)
        throw InvariantViolation("product of invertibles is not invertible");
      table[a * n + b] = pos[p[0].index];
    }
  try {
    out.group = GroupTable::make(n, std::move(table), 0);
  } catch (const StructuralError& e) {
    throw InvariantViolation(std::string("invertibles do not form a group: ") + e.what());
  }
  return out;
}

inline bool centralize(const ModularData& md, int i, int j) {
  return std::abs(md.s(i, j) - Complex(md.d(i) * md.d(j), 0.0)) <= md.scaled_tolerance();
}

/// K' = {i : s_ij = d_i d_j for all j in K}.
inline SubringBasis centralizer(const ModularData& md, const FusionRing& ring, const SubringBasis& k) {
  std::vector<int> out;
  for (int i = 0; i < md.rank(); ++i) {
    bool all = true;
    for (int j : k.indices())
      if (!centralize(md, i, j)) {
        all = false;
        break;
      }
    if (all) out.push_back(i);
  }
  auto c = make_unchecked_subring(std::move(out));
  std::string why;
  if (!c.is_closed_in(ring, &why)) throw InvariantViolation("centralizer is not a subcategory: " + why);
  return c;
}

inline double subcat_dim(const ModularData& md, const SubringBasis& k) {
  double s = 0.0;
  for (int i : k.indices()) s += md.d(i) * md.d(i);
  return s;
}

/// Every based subring, by brute force over subsets containing 0.
inline std::vector<SubringBasis> enumerate_subcats(const FusionRing& ring) {
  const int r = ring.rank();
  if (r > 16) throw PreconditionError("enumerate_subcats: rank too large");
  std::vector<SubringBasis> out;
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
    std::vector<int> idx{0};
    for (int b = 1; b < r; ++b)
      if (mask & (1u << (b - 1))) idx.push_back(b);
    auto s = make_unchecked_subring(std::move(idx));
    if (s.is_closed_in(ring)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct DoubleCentralizerReport {
  SubringBasis k, k1, k2;
  double dim_k = 0, dim_k1 = 0, global_dim = 0;
  bool double_equal = false;
  bool dims_ok = false;
  bool symmetric = false;  // k ⊆ k'
  bool modular = false;    // k ∩ k' = {0}

  bool passed() const { return double_equal && dims_ok; }
};

inline DoubleCentralizerReport double_centralizer_check(const ModularData& md, const FusionRing& ring,
                                                        const SubringBasis& k) {
  DoubleCentralizerReport rep;
  rep.k = k;
  rep.k1 = centralizer(md, ring, k);
  rep.k2 = centralizer(md, ring, rep.k1);
  rep.dim_k = subcat_dim(md, k);
  rep.dim_k1 = subcat_dim(md, rep.k1);
  rep.global_dim = md.global_dim();
  rep.double_equal = rep.k2 == k;
  rep.dims_ok = std::abs(rep.dim_k * rep.dim_k1 - rep.global_dim) <= kRatioTolerance * rep.global_dim;
  rep.symmetric = k.subset_of(rep.k1);
  int common = 0;
  for (int i : k.indices())
    if (rep.k1.contains(i)) ++common;
  rep.modular = common == 1;
  return rep;
}

struct SchneiderReport {
  Grading universal;
  InvertibleData invertibles;
  std::vector<int> u_factors;
  std::vector<int> g_factors;
  /// character_values[a][b]: value of the character attached to invertible
  /// indices[a] on universal block b.
  std::vector<std::vector<Complex>> character_values;
  double block_spread = 0.0;        // worst variation within a block
  double character_residual = 0.0;  // worst |χ(ab) - χ(a)χ(b)|
  bool constant_on_blocks = false;
  bool is_character = false;
  bool injective = false;

  bool passed() const {
    return u_factors == g_factors && constant_on_blocks && is_character && injective;
  }
};

/// U(C) versus the group of invertibles, with the explicit map
/// j ↦ (i ↦ s_ij / (d_i d_j)).
inline SchneiderReport schneider_iso_check(const ModularData& md, const FusionRing& ring) {
  SchneiderReport rep;
  rep.universal = universal_grading(ring);
  rep.invertibles = invertibles_from_smatrix(md, ring);
  if (!rep.universal.group.is_abelian() || !rep.invertibles.group.is_abelian())
    return rep;
  rep.u_factors = invariant_factors(rep.universal.group);
  rep.g_factors = invariant_factors(rep.invertibles.group);
  const double tol = md.tolerance();
  const auto& u = rep.universal;
  const int nb = u.num_blocks();
  rep.constant_on_blocks = true;
  rep.is_character = true;
  for (int j : rep.invertibles.indices) {
    std::vector<Complex> vals(nb);
    for (int b = 0; b < nb; ++b) {
      const int first = u.components[b][0];
      vals[b] = md.s(first, j) / (md.d(first) * md.d(j));
      for (int i : u.components[b]) {
        const double dev = std::abs(md.s(i, j) / (md.d(i) * md.d(j)) - vals[b]);
        rep.block_spread = std::max(rep.block_spread, dev);
      }
    }
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b)
        rep.character_residual =
            std::max(rep.character_residual, std::abs(vals[u.group.mul(a, b)] - vals[a] * vals[b]));
    rep.character_values.push_back(std::move(vals));
  }
  rep.constant_on_blocks = rep.block_spread <= tol;
  rep.is_character = rep.character_residual <= tol;
  rep.injective = true;
  for (std::size_t a = 0; a < rep.character_values.size(); ++a)
    for (std::size_t b = a + 1; b < rep.character_values.size(); ++b) {
      double diff = 0.0;
      for (int x = 0; x < nb; ++x)
        diff = std::max(diff, std::abs(rep.character_values[a][x] - rep.character_values[b][x]));
      if (diff <= tol) rep.injective = false;
    }
  return rep;
}

struct CentralSeriesCentralizerReport {
  SeriesReport upper;
  SeriesReport lower;
  std::vector<SubringBasis> centralizers;  // (C^(n))' for n = 0..horizon
  bool series_match = false;               // (C^(n))' = C_(n) for all n
  std::optional<int> first_mismatch;
  SubringBasis adjoint, pointed, pointed_centralizer;
  bool adjoint_is_pointed_centralizer = false;
  /// n ≥ c/2 with C^(n) symmetric; empty unless nilpotent.
  std::vector<int> symmetric_terms;
  bool symmetric_tail = true;

  bool passed() const { return series_match && adjoint_is_pointed_centralizer && symmetric_tail; }
};

inline CentralSeriesCentralizerReport central_series_centralizer_check(const ModularData& md,
                                                                       const FusionRing& ring) {
  CentralSeriesCentralizerReport rep;
  rep.upper = upper_central_series(ring);
  rep.lower = lower_central_series(ring);
  const int horizon = std::max(rep.upper.stabilized_at, rep.lower.stabilized_at) + 1;
  rep.series_match = true;
  for (int n = 0; n <= horizon; ++n) {
    rep.centralizers.push_back(centralizer(md, ring, rep.upper.at(n)));
    if (rep.centralizers.back() != rep.lower.at(n) && rep.series_match) {
      rep.series_match = false;
      rep.first_mismatch = n;
    }
  }
  rep.adjoint = adjoint_subring(ring);
  rep.pointed = pointed_subring(ring);
  rep.pointed_centralizer = centralizer(md, ring, rep.pointed);
  rep.adjoint_is_pointed_centralizer = rep.adjoint == rep.pointed_centralizer;
  if (rep.upper.nilpotency_class) {
    const int c = *rep.upper.nilpotency_class;
    for (int n = (c + 1) / 2; n <= c; ++n) {
      const auto& term = rep.upper.at(n);
      if (term.subset_of(centralizer(md, ring, term)))
        rep.symmetric_terms.push_back(n);
      else
        rep.symmetric_tail = false;
    }
  }
  return rep;
}

struct CentralizerIdentityReport {
  SubringBasis k;
  SubringBasis adjoint_centralizer;  // (K_ad)'
  SubringBasis centralizer_commutator;  // (K')^co
  bool holds = false;
};

/// (K_ad)' = (K')^co.
inline CentralizerIdentityReport centralizer_identity_check(const ModularData& md,
                                                            const FusionRing& ring,
                                                            const SubringBasis& k) {
  CentralizerIdentityReport rep;
  rep.k = k;
  rep.adjoint_centralizer = centralizer(md, ring, adjoint_within(ring, k));
  rep.centralizer_commutator = commutator_subring(ring, centralizer(md, ring, k));
  rep.holds = rep.adjoint_centralizer == rep.centralizer_commutator;
  return rep;
}

/// Worst violation of |s_ij| ≤ d_i d_j and of Re(d_i d_j - s_ij) ≥ 0; both
/// should be at most the scaled tolerance.
inline double dimension_bound_excess(const ModularData& md) {
  double worst = 0.0;
  for (int i = 0; i < md.rank(); ++i)
    for (int j = 0; j < md.rank(); ++j) {
      const double dd = md.d(i) * md.d(j);
      worst = std::max(worst, std::abs(md.s(i, j)) - dd);
      worst = std::max(worst, -(dd - md.s(i, j).real()));
    }
  return worst;
}

/// For all i, k: |s_ik| = d_i d_k iff X_k centralizes supp(X_i X_i*).
inline std::optional<std::vector<int>> invertible_centralizer_mismatch(const ModularData& md,
                                                                       const FusionRing& ring) {
  const double tol = md.scaled_tolerance();
  for (int i = 0; i < md.rank(); ++i)
    for (int k = 0; k < md.rank(); ++k) {
      const bool lhs = std::abs(std::abs(md.s(i, k)) - md.d(i) * md.d(k)) <= tol;
      bool rhs = true;
      for (const auto& t : ring.product(i, ring.dual(i)))
        if (!centralize(md, k, t.index)) rhs = false;
      if (lhs != rhs) return std::vector<int>{i, k};
    }
  return std::nullopt;
}

}  // namespace fusionkit
