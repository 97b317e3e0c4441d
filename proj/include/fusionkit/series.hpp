#pragma once

// Upper and lower central series, nilpotency class, commutator subrings.

#include <optional>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

struct SeriesReport {
  /// Distinct consecutive terms; the last one is the fixpoint.
  std::vector<SubringBasis> chain;
  int stabilized_at = 0;
  /// First step at which the terminal value is reached ({0} for the upper
  /// series, the whole basis for the lower series); absent if never.
  std::optional<int> nilpotency_class;

  bool reaches_terminal() const { return nilpotency_class.has_value(); }

  /// The n-th term, continuing constantly past stabilization.
  const SubringBasis& at(int n) const {
    return chain[std::min<std::size_t>(static_cast<std::size_t>(n), chain.size() - 1)];
  }
};

/// Adjoint subring of the based subring s, computed on the induced ring and
/// expressed in the indices of `ring`.
inline SubringBasis adjoint_within(const FusionRing& ring, const SubringBasis& s) {
  return lift_subring(s, adjoint_subring(induced_ring(ring, s)));
}

inline SeriesReport upper_central_series(const FusionRing& ring) {
  SeriesReport rep;
  rep.chain.push_back(SubringBasis::whole(ring));
  for (int step = 0; step <= ring.rank(); ++step) {
    auto next = adjoint_within(ring, rep.chain.back());
    if (next == rep.chain.back()) break;
    if (!next.subset_of(rep.chain.back()))
      throw InvariantViolation("upper central series is not decreasing");
    rep.chain.push_back(std::move(next));
  }
  rep.stabilized_at = static_cast<int>(rep.chain.size()) - 1;
  if (rep.chain.back().is_trivial()) rep.nilpotency_class = rep.stabilized_at;
  return rep;
}

inline std::optional<int> nilpotency_class(const FusionRing& ring) {
  return upper_central_series(ring).nilpotency_class;
}

/// S^co: basic Y with supp(Y Y*) inside s. Requires a commutative ring.
inline SubringBasis commutator_subring(const FusionRing& ring, const SubringBasis& s) {
  if (!is_commutative(ring))
    throw PreconditionError("commutator_subring requires a commutative ring");
  std::string why;
  if (!s.is_closed_in(ring, &why)) throw PreconditionError("commutator_subring: " + why);
  std::vector<int> out;
  for (int i = 0; i < ring.rank(); ++i) {
    bool inside = true;
    for (const auto& t : ring.product(i, ring.dual(i)))
      if (!s.contains(t.index)) inside = false;
    if (inside) out.push_back(i);
  }
  auto co = make_unchecked_subring(std::move(out));
  if (!co.is_closed_in(ring, &why))
    throw InvariantViolation("commutator is not a based subring: " + why);
  return co;
}

/// Z1 ⊆ R_pt ⊆ (R_pt)^co ⊆ ... Requires a commutative ring.
inline SeriesReport lower_central_series(const FusionRing& ring) {
  if (!is_commutative(ring))
    throw PreconditionError("lower_central_series requires a commutative ring");
  SeriesReport rep;
  rep.chain.push_back(SubringBasis::trivial());
  for (int step = 0; step <= ring.rank(); ++step) {
    auto next = commutator_subring(ring, rep.chain.back());
    if (next == rep.chain.back()) break;
    if (!rep.chain.back().subset_of(next))
      throw InvariantViolation("lower central series is not increasing");
    rep.chain.push_back(std::move(next));
  }
  rep.stabilized_at = static_cast<int>(rep.chain.size()) - 1;
  if (rep.chain.back().size() == ring.rank()) rep.nilpotency_class = rep.stabilized_at;
  return rep;
}

struct SeriesInclusion {
  int k = 0;          // R^(k) ⊆ R_(n-k)
  bool holds = false;
};

struct DualityReport {
  SeriesReport upper;
  SeriesReport lower;
  /// For every n: R^(n) = Z1 iff R_(n) = R.
  bool equivalence_holds = false;
  std::optional<int> first_mismatch;
  std::vector<SeriesInclusion> inclusions;  // only when nilpotent

  bool passed() const {
    if (!equivalence_holds) return false;
    for (const auto& inc : inclusions)
      if (!inc.holds) return false;
    return true;
  }
};

inline DualityReport verify_series_duality(const FusionRing& ring) {
  if (!is_commutative(ring))
    throw PreconditionError("verify_series_duality requires a commutative ring");
  DualityReport rep{upper_central_series(ring), lower_central_series(ring), true, std::nullopt, {}};
  const int horizon = std::max(rep.upper.stabilized_at, rep.lower.stabilized_at) + 1;
  for (int n = 0; n <= horizon; ++n) {
    const bool up = rep.upper.at(n).is_trivial();
    const bool lo = rep.lower.at(n).size() == ring.rank();
    if (up != lo) {
      rep.equivalence_holds = false;
      rep.first_mismatch = n;
      break;
    }
  }
  if (rep.upper.nilpotency_class) {
    const int n = *rep.upper.nilpotency_class;
    for (int k = 0; k <= n; ++k)
      rep.inclusions.push_back({k, rep.upper.at(k).subset_of(rep.lower.at(n - k))});
  }
  return rep;
}

}  // namespace fusionkit
