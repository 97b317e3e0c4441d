#pragma once

// Based modules over fusion rings: axioms, decomposition over a subring, FP
// dimensions of module basis elements, the induced action of the universal
// grading group on adjoint components, and the divisibility certificate for
// nilpotent rings.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/perron.hpp"
#include "fusionkit/ring.hpp"
#include "fusionkit/series.hpp"

namespace fusionkit {

/// Integer flags on scale-invariant ratios use this relative tolerance.
inline constexpr double kRatioTolerance = 1e-7;

/// d_{ij}^k: coefficient of V_k in X_i V_j.
class BasedModule {
 public:
  BasedModule() = default;

  static BasedModule make(int ring_rank, int module_rank, std::vector<Entry> action) {
    if (ring_rank <= 0 || module_rank <= 0) throw StructuralError("ranks must be positive");
    BasedModule m;
    m.ring_rank_ = ring_rank;
    m.module_rank_ = module_rank;
    for (const auto& e : action) {
      if (e.i < 0 || e.i >= ring_rank || e.j < 0 || e.j >= module_rank || e.k < 0 ||
          e.k >= module_rank)
        throw StructuralError(detail::concat("action index ", detail::tuple_string({e.i, e.j, e.k}),
                                             " out of range"));
      if (e.value < 0)
        throw StructuralError(
            detail::concat("negative action constant at ", detail::tuple_string({e.i, e.j, e.k})));
      if (e.value != 0) m.entries_.push_back(e);
    }
    std::sort(m.entries_.begin(), m.entries_.end());
    for (std::size_t n = 1; n < m.entries_.size(); ++n) {
      const auto& a = m.entries_[n - 1];
      const auto& b = m.entries_[n];
      if (a.i == b.i && a.j == b.j && a.k == b.k)
        throw StructuralError(
            detail::concat("duplicate action constant at ", detail::tuple_string({a.i, a.j, a.k})));
    }
    m.acts_.assign(static_cast<std::size_t>(ring_rank) * module_rank, {});
    for (const auto& e : m.entries_)
      m.acts_[static_cast<std::size_t>(e.i) * module_rank + e.j].push_back({e.k, e.value});
    return m;
  }

  int ring_rank() const { return ring_rank_; }
  int module_rank() const { return module_rank_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// X_i V_j.
  std::span<const Term> act(int i, int j) const {
    return acts_[static_cast<std::size_t>(i) * module_rank_ + j];
  }

  long long coeff(int i, int j, int k) const {
    for (const auto& t : act(i, j))
      if (t.index == k) return t.mult;
    return 0;
  }

 private:
  int ring_rank_ = 0;
  int module_rank_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::vector<Term>> acts_;
};

inline ValidationReport validate_module(const FusionRing& ring, const BasedModule& m) {
  if (m.ring_rank() != ring.rank())
    throw StructuralError(detail::concat("module is over a ring of rank ", m.ring_rank(),
                                         ", ring has rank ", ring.rank()));
  ValidationReport rep;
  const int r = ring.rank();
  const int n = m.module_rank();
  {
    std::vector<int> w;
    for (int j = 0; j < n && w.empty(); ++j)
      for (int k = 0; k < n && w.empty(); ++k)
        if (m.coeff(0, j, k) != (j == k ? 1 : 0)) w = {0, j, k};
    if (!w.empty())
      rep.violations.push_back({"unit_action", w,
                                detail::concat("d_{0", w[1], "}^", w[2], " = ", m.coeff(0, w[1], w[2]))});
  }
  {
    std::vector<int> w;
    for (int i = 0; i < r && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        for (int k = 0; k < n && w.empty(); ++k)
          if (m.coeff(i, j, k) != m.coeff(ring.dual(i), k, j)) w = {i, j, k};
    if (!w.empty())
      rep.violations.push_back({"adjointness", w,
                                detail::concat("d_ij^k = ", m.coeff(w[0], w[1], w[2]),
                                               ", d_{i*k}^j = ", m.coeff(ring.dual(w[0]), w[2], w[1]))});
  }
  {
    // (X_i X_l) V_j versus X_i (X_l V_j)
    std::vector<int> w;
    std::vector<long long> lhs(n), rhs(n);
    for (int i = 0; i < r && w.empty(); ++i)
      for (int l = 0; l < r && w.empty(); ++l)
        for (int j = 0; j < n && w.empty(); ++j) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& t : ring.product(i, l))
            for (const auto& u : m.act(t.index, j)) lhs[u.index] += t.mult * u.mult;
          for (const auto& t : m.act(l, j))
            for (const auto& u : m.act(i, t.index)) rhs[u.index] += t.mult * u.mult;
          for (int k = 0; k < n; ++k)
            if (lhs[k] != rhs[k]) {
              w = {i, l, j, k};
              break;
            }
        }
    if (!w.empty())
      rep.violations.push_back({"module_law", w, "((X_i X_l) V_j, V_k) != (X_i (X_l V_j), V_k)"});
  }
  return rep;
}

/// R as a based module over itself.
inline BasedModule regular_module(const FusionRing& ring) {
  return BasedModule::make(ring.rank(), ring.rank(), ring.entries());
}

/// Rank-one module X_i V = FPdim(X_i) V; exists only when every FP
/// dimension is an integer.
inline BasedModule trivial_module(const FusionRing& ring, const FPData& fp) {
  std::vector<Entry> action;
  for (int i = 0; i < ring.rank(); ++i) {
    if (!fp.integer_flags[i])
      throw PreconditionError(detail::concat("trivial_module: FPdim(X_", i, ") is not an integer"));
    action.push_back({i, 0, 0, std::llround(fp.dims[i])});
  }
  return BasedModule::make(ring.rank(), 1, std::move(action));
}

/// Connected components of j ~ k when d_{ij}^k > 0 for some i in s. Blocks
/// are ordered by smallest member.
inline std::vector<std::vector<int>> decompose_over_subring(const FusionRing& ring,
                                                            const SubringBasis& s,
                                                            const BasedModule& m) {
  if (m.ring_rank() != ring.rank()) throw StructuralError("module/ring rank mismatch");
  detail::DisjointSets ds(m.module_rank());
  for (int i : s.indices())
    for (int j = 0; j < m.module_rank(); ++j)
      for (const auto& t : m.act(i, j)) ds.unite(j, t.index);
  return ds.blocks();
}

struct ModuleFPData {
  std::vector<double> dims;                     // min entry 1 on each indecomposable component
  std::vector<std::vector<int>> components;     // indecomposable components over the whole ring
  std::vector<double> component_masses;         // Σ dims_j² per component
  double tolerance = kDefaultTolerance;
  double eigen_residual = 0.0;

  double mass(const std::vector<int>& indices) const {
    double s = 0.0;
    for (int j : indices) s += dims[j] * dims[j];
    return s;
  }
};

/// Positive common eigenvector of all L_{X_i}, one power iteration per
/// indecomposable component on Σ_i L_{X_i} restricted to it.
inline ModuleFPData module_fp_data(const FusionRing& ring, const BasedModule& m, const FPData& fp,
                                   double tolerance = kDefaultTolerance,
                                   long max_iterations = kDefaultMaxIterations) {
  ModuleFPData out;
  out.tolerance = tolerance;
  out.components = decompose_over_subring(ring, SubringBasis::whole(ring), m);
  out.dims.assign(m.module_rank(), 0.0);
  for (const auto& comp : out.components) {
    const int c = static_cast<int>(comp.size());
    std::vector<int> local(m.module_rank(), -1);
    for (int t = 0; t < c; ++t) local[comp[t]] = t;
    DenseMatrix sum(c);
    for (const auto& e : m.entries()) {
      if (local[e.j] < 0) continue;
      sum(local[e.k], local[e.j]) += static_cast<double>(e.value);
    }
    auto pr = perron_vector(sum, tolerance, max_iterations);
    const double mn = *std::min_element(pr.vector.begin(), pr.vector.end());
    for (int t = 0; t < c; ++t) out.dims[comp[t]] = pr.vector[t] / mn;
    out.component_masses.push_back(out.mass(comp));
  }
  double worst = 0.0;
  for (int i = 0; i < ring.rank(); ++i)
    for (int k = 0; k < m.module_rank(); ++k) {
      double lhs = 0.0;
      for (int j = 0; j < m.module_rank(); ++j)
        lhs += static_cast<double>(m.coeff(i, j, k)) * out.dims[j];
      const double rhs = fp.dims[i] * out.dims[k];
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
    }
  out.eigen_residual = worst;
  if (worst > 10 * tolerance)
    throw ConvergenceError(detail::concat("module FP vector fails the eigenvector identity (residual ",
                                          worst, ")"),
                           worst, 0);
  return out;
}

/// Indecomposable R_ad-components of an indecomposable module, with the
/// action a·x = y iff X_a V_x has a constituent in M_y.
struct USetAction {
  Grading universal;
  std::vector<std::vector<int>> components;
  std::vector<int> action;  // action[a * components.size() + x]
  std::vector<double> component_masses;
  bool transitive = false;

  int num_components() const { return static_cast<int>(components.size()); }
  int act(int a, int x) const { return action[static_cast<std::size_t>(a) * components.size() + x]; }
};

inline USetAction uset_action(const FusionRing& ring, const BasedModule& m,
                              double tolerance = kDefaultTolerance,
                              long max_iterations = kDefaultMaxIterations) {
  if (decompose_over_subring(ring, SubringBasis::whole(ring), m).size() != 1)
    throw PreconditionError("uset_action requires an indecomposable module");
  USetAction out;
  out.universal = universal_grading(ring);
  out.components = decompose_over_subring(ring, adjoint_subring(ring), m);
  const auto& u = out.universal;
  const int nb = u.num_blocks();
  const int nc = out.num_components();
  std::vector<int> comp_of(m.module_rank());
  for (int x = 0; x < nc; ++x)
    for (int j : out.components[x]) comp_of[j] = x;

  out.action.assign(static_cast<std::size_t>(nb) * nc, -1);
  for (int a = 0; a < nb; ++a)
    for (int x = 0; x < nc; ++x) {
      auto p = m.act(u.components[a][0], out.components[x][0]);
      if (p.empty()) throw InvariantViolation("basic element acts by zero");
      const int y = comp_of[p[0].index];
      for (int i : u.components[a])
        for (int j : out.components[x])
          for (const auto& t : m.act(i, j))
            if (comp_of[t.index] != y)
              throw InvariantViolation(detail::concat("U(R)-action not well defined: X_", i, " V_", j,
                                                      " meets components ", y, " and ",
                                                      comp_of[t.index]));
      out.action[static_cast<std::size_t>(a) * nc + x] = y;
    }
  for (int x = 0; x < nc; ++x) {
    if (out.act(u.identity_block, x) != x) throw InvariantViolation("identity block acts nontrivially");
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b)
        if (out.act(u.group.mul(a, b), x) != out.act(a, out.act(b, x)))
          throw InvariantViolation("U(R)-action is not compatible with the group law");
  }
  std::vector<char> reached(nc, 0);
  for (int a = 0; a < nb; ++a) reached[out.act(a, 0)] = 1;
  out.transitive = std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
  if (!out.transitive) throw InvariantViolation("U(R)-action on components is not transitive");

  const auto fp = fp_dimensions(ring, tolerance, max_iterations);
  const auto mfp = module_fp_data(ring, m, fp, tolerance, max_iterations);
  for (const auto& comp : out.components) out.component_masses.push_back(mfp.mass(comp));
  for (double mass : out.component_masses)
    if (std::abs(mass - out.component_masses[0]) > kRatioTolerance * out.component_masses[0])
      throw InvariantViolation("adjoint components have unequal FP masses");
  return out;
}

inline bool near_positive_integer_relative(double x, double rel_tol = kRatioTolerance) {
  const double n = std::round(x);
  return n >= 1.0 && std::abs(x - n) <= rel_tol * std::max(1.0, std::abs(x));
}

struct DivisibilityReport {
  struct ModuleRatio {
    int basic = 0;               // module basis index j
    int component = 0;           // adjoint component containing V_j
    double module_ratio = 0.0;   // FPdim(M) / FPdim(V_j)^2
    double component_ratio = 0;  // FPdim(M_x) / FPdim(V_j)^2
    bool module_integer = false;
    bool component_integer = false;
  };
  struct RingRatio {
    int basic = 0;
    double ratio = 0.0;  // FPdim(R_ad) / FPdim(X_i)^2
    bool integer = false;
  };

  bool advisory = false;  // ring is not nilpotent, so no integrality is promised
  double module_dim = 0.0;
  double adjoint_dim = 0.0;
  std::vector<ModuleRatio> module_ratios;
  std::vector<RingRatio> ring_ratios;

  bool all_integer() const {
    for (const auto& r : module_ratios)
      if (!r.module_integer || !r.component_integer) return false;
    for (const auto& r : ring_ratios)
      if (!r.integer) return false;
    return true;
  }
};

inline DivisibilityReport divisibility_report(const FusionRing& ring, const BasedModule& m,
                                              const FPData& fp, const ModuleFPData& mfp) {
  if (mfp.components.size() != 1)
    throw PreconditionError("divisibility_report requires an indecomposable module");
  DivisibilityReport rep;
  rep.advisory = !nilpotency_class(ring).has_value();
  const auto adj = adjoint_subring(ring);
  const auto comps = decompose_over_subring(ring, adj, m);
  rep.module_dim = mfp.mass(mfp.components[0]);
  for (int x = 0; x < static_cast<int>(comps.size()); ++x)
    for (int j : comps[x]) {
      const double mu2 = mfp.dims[j] * mfp.dims[j];
      DivisibilityReport::ModuleRatio r;
      r.basic = j;
      r.component = x;
      r.module_ratio = rep.module_dim / mu2;
      r.component_ratio = mfp.mass(comps[x]) / mu2;
      r.module_integer = near_positive_integer_relative(r.module_ratio);
      r.component_integer = near_positive_integer_relative(r.component_ratio);
      rep.module_ratios.push_back(r);
    }
  std::sort(rep.module_ratios.begin(), rep.module_ratios.end(),
            [](const auto& a, const auto& b) { return a.basic < b.basic; });
  for (int i : adj.indices()) rep.adjoint_dim += fp.dims[i] * fp.dims[i];
  for (int i = 0; i < ring.rank(); ++i) {
    const double ratio = rep.adjoint_dim / (fp.dims[i] * fp.dims[i]);
    rep.ring_ratios.push_back({i, ratio, near_positive_integer_relative(ratio)});
  }
  return rep;
}

}  // namespace fusionkit
