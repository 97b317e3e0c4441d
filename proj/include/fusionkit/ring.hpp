#pragma once

// Fusion (based, unital) rings: sparse structure constants, the based-ring
// axioms, and basic subring constructions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "fusionkit/errors.hpp"

namespace fusionkit {

/// One structure constant N_{ij}^k = value (coefficient of X_k in X_i X_j).
struct Entry {
  int i = 0;
  int j = 0;
  int k = 0;
  long long value = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
  friend auto operator<=>(const Entry& a, const Entry& b) {
    return std::tie(a.i, a.j, a.k, a.value) <=> std::tie(b.i, b.j, b.k, b.value);
  }
};

/// A basis index with multiplicity, as it appears in a product.
struct Term {
  int index = 0;
  long long mult = 0;
};

/// Based ring with unit at index 0. Immutable once built.
class FusionRing {
 public:
  FusionRing() = default;

  /// Builds a ring from sparse constants. Zero entries are dropped. Throws
  /// StructuralError on out-of-range indices, negative or duplicated
  /// constants, or a dual map that is not a map into {0..rank-1}. Axioms are
  /// not checked here; see validate_ring.
  static FusionRing make(int rank, std::vector<int> dual, std::vector<Entry> entries,
                         std::vector<std::string> labels = {}) {
    if (rank <= 0) throw StructuralError("rank must be positive");
    if (static_cast<int>(dual.size()) != rank)
      throw StructuralError(detail::concat("dual has length ", dual.size(), ", expected ", rank));
    for (int i = 0; i < rank; ++i)
      if (dual[i] < 0 || dual[i] >= rank)
        throw StructuralError(detail::concat("dual[", i, "] = ", dual[i], " out of range"));
    if (labels.empty()) {
      for (int i = 0; i < rank; ++i) labels.push_back(std::to_string(i));
    } else if (static_cast<int>(labels.size()) != rank) {
      throw StructuralError(detail::concat("labels has length ", labels.size(), ", expected ", rank));
    }

    FusionRing r;
    r.rank_ = rank;
    r.dual_ = std::move(dual);
    r.labels_ = std::move(labels);
    for (const auto& e : entries) {
      if (e.i < 0 || e.i >= rank || e.j < 0 || e.j >= rank || e.k < 0 || e.k >= rank)
        throw StructuralError(
            detail::concat("structure constant index ", detail::tuple_string({e.i, e.j, e.k}),
                           " out of range for rank ", rank));
      if (e.value < 0)
        throw StructuralError(detail::concat("negative structure constant at ",
                                             detail::tuple_string({e.i, e.j, e.k})));
      if (e.value != 0) r.entries_.push_back(e);
    }
    std::sort(r.entries_.begin(), r.entries_.end());
    for (std::size_t n = 1; n < r.entries_.size(); ++n) {
      const auto& a = r.entries_[n - 1];
      const auto& b = r.entries_[n];
      if (a.i == b.i && a.j == b.j && a.k == b.k)
        throw StructuralError(
            detail::concat("duplicate structure constant at ", detail::tuple_string({a.i, a.j, a.k})));
    }
    r.products_.assign(static_cast<std::size_t>(rank) * rank, {});
    for (const auto& e : r.entries_) r.products_[r.slot(e.i, e.j)].push_back({e.k, e.value});
    return r;
  }

  int rank() const { return rank_; }
  int dual(int i) const { return dual_[i]; }
  const std::vector<int>& duals() const { return dual_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  /// Sorted by (i, j, k); no zero values.
  const std::vector<Entry>& entries() const { return entries_; }

  /// Support of X_i X_j with multiplicities, sorted by index.
  std::span<const Term> product(int i, int j) const { return products_[slot(i, j)]; }

  long long coeff(int i, int j, int k) const {
    for (const auto& t : product(i, j))
      if (t.index == k) return t.mult;
    return 0;
  }

  /// Equality of the based rings under the stored basis order (labels ignored).
  friend bool operator==(const FusionRing& a, const FusionRing& b) {
    return a.rank_ == b.rank_ && a.dual_ == b.dual_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i) * rank_ + j; }

  int rank_ = 0;
  std::vector<int> dual_;
  std::vector<std::string> labels_;
  std::vector<Entry> entries_;
  std::vector<std::vector<Term>> products_;
};

/// An element Σ a_i X_i of the ring, in the distinguished basis.
struct ElementVec {
  std::vector<long long> coeffs;

  ElementVec() = default;
  explicit ElementVec(std::vector<long long> c) : coeffs(std::move(c)) {}

  static ElementVec zero(int rank) { return ElementVec(std::vector<long long>(rank, 0)); }
  static ElementVec basic(int rank, int i) {
    auto v = zero(rank);
    v.coeffs[i] = 1;
    return v;
  }

  int size() const { return static_cast<int>(coeffs.size()); }
  long long operator[](int i) const { return coeffs[i]; }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
      if (coeffs[i] != 0) s.push_back(i);
    return s;
  }

  friend bool operator==(const ElementVec&, const ElementVec&) = default;
};

/// The symmetric pairing (X, Y) = Σ a_i b_i.
inline long long pairing(const ElementVec& x, const ElementVec& y) {
  if (x.size() != y.size()) throw PreconditionError("pairing: rank mismatch");
  long long s = 0;
  for (int i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline ElementVec operator+(ElementVec a, const ElementVec& b) {
  if (a.size() != b.size()) throw PreconditionError("element sum: rank mismatch");
  for (int i = 0; i < a.size(); ++i) a.coeffs[i] += b[i];
  return a;
}

inline ElementVec multiply(const FusionRing& ring, const ElementVec& x, const ElementVec& y) {
  if (x.size() != ring.rank() || y.size() != ring.rank())
    throw PreconditionError(detail::concat("multiply: rank mismatch (ring rank ", ring.rank(),
                                           ", operands ", x.size(), " and ", y.size(), ")"));
  auto out = ElementVec::zero(ring.rank());
  for (int i = 0; i < ring.rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < ring.rank(); ++j) {
      if (y[j] == 0) continue;
      for (const auto& t : ring.product(i, j)) out.coeffs[t.index] += x[i] * y[j] * t.mult;
    }
  }
  return out;
}

inline ElementVec dual_element(const FusionRing& ring, const ElementVec& x) {
  if (x.size() != ring.rank()) throw PreconditionError("dual_element: rank mismatch");
  auto out = ElementVec::zero(ring.rank());
  for (int i = 0; i < ring.rank(); ++i) out.coeffs[ring.dual(i)] += x[i];
  return out;
}

/// Basic element X_i as an ElementVec.
inline ElementVec basic(const FusionRing& ring, int i) { return ElementVec::basic(ring.rank(), i); }

/// supp(X_i X_j).
inline std::vector<int> product_support(const FusionRing& ring, int i, int j) {
  std::vector<int> s;
  for (const auto& t : ring.product(i, j)) s.push_back(t.index);
  return s;
}

// ---------------------------------------------------------------------------
// Subrings

/// Sorted set of basis indices containing 0 and closed under duality and
/// product support.
class SubringBasis {
 public:
  SubringBasis() : indices_{0} {}

  /// Checks the subring invariants against `ring`; throws PreconditionError
  /// when they fail.
  static SubringBasis checked(const FusionRing& ring, std::vector<int> indices) {
    SubringBasis s = unchecked(std::move(indices));
    std::string why;
    if (!s.is_closed_in(ring, &why)) throw PreconditionError("not a based subring: " + why);
    return s;
  }

  static SubringBasis whole(const FusionRing& ring) {
    std::vector<int> all(ring.rank());
    std::iota(all.begin(), all.end(), 0);
    return unchecked(std::move(all));
  }

  static SubringBasis trivial() { return SubringBasis(); }

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }
  bool is_trivial() const { return indices_.size() == 1; }

  bool subset_of(const SubringBasis& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                         indices_.end());
  }

  bool is_closed_in(const FusionRing& ring, std::string* why = nullptr) const {
    auto fail = [&](std::string msg) {
      if (why) *why = std::move(msg);
      return false;
    };
    if (indices_.empty() || indices_.front() != 0) return fail("does not contain the unit");
    for (int i : indices_) {
      if (i < 0 || i >= ring.rank()) return fail(detail::concat("index ", i, " out of range"));
      if (!contains(ring.dual(i))) return fail(detail::concat("dual of ", i, " missing"));
    }
    for (int i : indices_)
      for (int j : indices_)
        for (const auto& t : ring.product(i, j))
          if (!contains(t.index))
            return fail(detail::concat("X_", i, " X_", j, " contains X_", t.index));
    return true;
  }

  friend bool operator==(const SubringBasis&, const SubringBasis&) = default;
  friend auto operator<=>(const SubringBasis& a, const SubringBasis& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  static SubringBasis unchecked(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    SubringBasis s;
    s.indices_ = std::move(indices);
    return s;
  }

  friend SubringBasis make_unchecked_subring(std::vector<int>);

  std::vector<int> indices_;
};

/// For operations whose result is a subring by construction; callers assert
/// closure themselves where the math says it must hold.
inline SubringBasis make_unchecked_subring(std::vector<int> indices) {
  return SubringBasis::unchecked(std::move(indices));
}

/// Smallest based subring containing `seed`.
inline SubringBasis subring_closure(const FusionRing& ring, const std::vector<int>& seed) {
  const int r = ring.rank();
  std::vector<char> in(r, 0);
  in[0] = 1;
  for (int i : seed) {
    if (i < 0 || i >= r)
      throw PreconditionError(detail::concat("subring_closure: seed index ", i, " out of range"));
    in[i] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cur;
    for (int i = 0; i < r; ++i)
      if (in[i]) cur.push_back(i);
    for (int i : cur) {
      if (!in[ring.dual(i)]) in[ring.dual(i)] = 1, changed = true;
      for (int j : cur)
        for (const auto& t : ring.product(i, j))
          if (!in[t.index]) in[t.index] = 1, changed = true;
    }
  }
  std::vector<int> out;
  for (int i = 0; i < r; ++i)
    if (in[i]) out.push_back(i);
  return make_unchecked_subring(std::move(out));
}

/// Indices i with X_i X_{i*} = 1.
inline std::vector<int> invertible_basics(const FusionRing& ring) {
  std::vector<int> out;
  for (int i = 0; i < ring.rank(); ++i) {
    auto p = ring.product(i, ring.dual(i));
    if (p.size() == 1 && p[0].index == 0 && p[0].mult == 1) out.push_back(i);
  }
  return out;
}

inline SubringBasis pointed_subring(const FusionRing& ring) {
  auto inv = invertible_basics(ring);
  auto s = make_unchecked_subring(inv);
  if (!s.is_closed_in(ring))
    throw InvariantViolation("invertible basic elements do not form a based subring");
  return s;
}

inline bool is_commutative(const FusionRing& ring) {
  for (int i = 0; i < ring.rank(); ++i)
    for (int j = i + 1; j < ring.rank(); ++j) {
      auto a = ring.product(i, j);
      auto b = ring.product(j, i);
      if (a.size() != b.size()) return false;
      for (std::size_t n = 0; n < a.size(); ++n)
        if (a[n].index != b[n].index || a[n].mult != b[n].mult) return false;
    }
  return true;
}

/// The based ring spanned by a subring, reindexed so that s.indices()[t]
/// becomes basis index t.
inline FusionRing induced_ring(const FusionRing& ring, const SubringBasis& s) {
  const auto& idx = s.indices();
  std::vector<int> pos(ring.rank(), -1);
  for (int t = 0; t < s.size(); ++t) pos[idx[t]] = t;
  std::vector<int> dual(s.size());
  std::vector<std::string> labels;
  for (int t = 0; t < s.size(); ++t) {
    dual[t] = pos[ring.dual(idx[t])];
    labels.push_back(ring.label(idx[t]));
  }
  std::vector<Entry> entries;
  for (const auto& e : ring.entries()) {
    if (pos[e.i] < 0 || pos[e.j] < 0) continue;
    if (pos[e.k] < 0)
      throw PreconditionError("induced_ring: index set is not a based subring");
    entries.push_back({pos[e.i], pos[e.j], pos[e.k], e.value});
  }
  return FusionRing::make(s.size(), std::move(dual), std::move(entries), std::move(labels));
}

/// Maps a subring of induced_ring(ring, s) back to indices of `ring`.
inline SubringBasis lift_subring(const SubringBasis& s, const SubringBasis& inner) {
  std::vector<int> out;
  for (int t : inner.indices()) out.push_back(s.indices()[t]);
  return make_unchecked_subring(std::move(out));
}

// ---------------------------------------------------------------------------
// Axioms

namespace detail {

inline void keep_smallest(std::vector<int>& best, const std::vector<int>& cand) {
  if (best.empty() || cand < best) best = cand;
}

}  // namespace detail

/// Checks the based-ring axioms. Each violated axiom is reported once, with
/// its lexicographically smallest witness.
inline ValidationReport validate_ring(const FusionRing& ring) {
  ValidationReport rep;
  const int r = ring.rank();
  auto N = [&](int i, int j, int k) { return ring.coeff(i, j, k); };

  {
    std::vector<int> w;
    for (int i = 0; i < r && w.empty(); ++i)
      if (ring.dual(ring.dual(i)) != i) w = {i};
    if (!w.empty())
      rep.violations.push_back({"dual_involution", w,
                                detail::concat("dual(dual(", w[0], ")) = ",
                                               ring.dual(ring.dual(w[0])))});
    if (ring.dual(0) != 0)
      rep.violations.push_back({"dual_unit", {0}, detail::concat("dual(0) = ", ring.dual(0))});
  }
  {
    std::vector<int> w;
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        long long want = (j == k) ? 1 : 0;
        if (N(0, j, k) != want) detail::keep_smallest(w, {0, j, k});
        if (N(j, 0, k) != want) detail::keep_smallest(w, {j, 0, k});
      }
    if (!w.empty())
      rep.violations.push_back({"unit_law", w,
                                detail::concat("N", detail::tuple_string(w), " = ",
                                               N(w[0], w[1], w[2]))});
  }
  {
    // (X_i X_j) X_k versus X_i (X_j X_k), compared coefficientwise.
    std::vector<int> w;
    std::vector<long long> lhs(r), rhs(r);
    for (int i = 0; i < r && w.empty(); ++i)
      for (int j = 0; j < r && w.empty(); ++j)
        for (int k = 0; k < r && w.empty(); ++k) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& m : ring.product(i, j))
            for (const auto& l : ring.product(m.index, k)) lhs[l.index] += m.mult * l.mult;
          for (const auto& m : ring.product(j, k))
            for (const auto& l : ring.product(i, m.index)) rhs[l.index] += m.mult * l.mult;
          for (int l = 0; l < r; ++l)
            if (lhs[l] != rhs[l]) {
              w = {i, j, k, l};
              break;
            }
        }
    if (!w.empty())
      rep.violations.push_back({"associativity", w, "((X_i X_j) X_k, X_l) != (X_i (X_j X_k), X_l)"});
  }
  {
    std::vector<int> w;
    for (int i = 0; i < r && w.empty(); ++i)
      for (int j = 0; j < r && w.empty(); ++j)
        for (int k = 0; k < r && w.empty(); ++k) {
          long long a = N(i, j, k);
          if (a != N(ring.dual(i), k, j) || a != N(k, ring.dual(j), i)) w = {i, j, k};
        }
    if (!w.empty())
      rep.violations.push_back(
          {"frobenius_reciprocity", w,
           detail::concat("N_ij^k = ", N(w[0], w[1], w[2]), ", N_{i*k}^j = ",
                          N(ring.dual(w[0]), w[2], w[1]), ", N_{kj*}^i = ",
                          N(w[2], ring.dual(w[1]), w[0]))});
  }
  {
    std::vector<int> w;
    for (int i = 0; i < r && w.empty(); ++i)
      for (int j = 0; j < r && w.empty(); ++j)
        if (N(i, j, 0) != (j == ring.dual(i) ? 1 : 0)) w = {i, j};
    if (!w.empty())
      rep.violations.push_back({"unit_multiplicity", w,
                                detail::concat("N_{", w[0], ",", w[1], "}^0 = ", N(w[0], w[1], 0))});
  }
  return rep;
}

}  // namespace fusionkit
