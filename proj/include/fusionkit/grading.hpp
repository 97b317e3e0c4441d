#pragma once

// Adjoint subring, universal grading, and the grading by square classes of
// dimensions.

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/group.hpp"
#include "fusionkit/perron.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

/// I(1) = Σ_i X_i X_i*.
inline ElementVec regular_adjoint_element(const FusionRing& ring) {
  auto out = ElementVec::zero(ring.rank());
  for (int i = 0; i < ring.rank(); ++i)
    for (const auto& t : ring.product(i, ring.dual(i))) out.coeffs[t.index] += t.mult;
  return out;
}

/// Smallest based subring containing every X_i X_i*.
inline SubringBasis adjoint_subring(const FusionRing& ring) {
  return subring_closure(ring, regular_adjoint_element(ring).support());
}

/// Faithful grading: a partition of the basis into blocks, with a group law
/// on block ids.
struct Grading {
  std::vector<std::vector<int>> components;
  GroupTable group;
  int identity_block = 0;

  int num_blocks() const { return static_cast<int>(components.size()); }

  std::vector<int> block_of(int rank) const {
    std::vector<int> b(rank, -1);
    for (int a = 0; a < num_blocks(); ++a)
      for (int i : components[a]) b[i] = a;
    return b;
  }
};

/// Returns a description of the first broken grading invariant, if any.
inline std::optional<std::string> grading_defect(const FusionRing& ring, const Grading& g) {
  if (g.group.order() != g.num_blocks())
    return detail::concat("group order ", g.group.order(), " != number of blocks ", g.num_blocks());
  if (g.identity_block != g.group.identity()) return std::string("identity block is not the group identity");
  std::vector<int> seen(ring.rank(), 0);
  for (int a = 0; a < g.num_blocks(); ++a) {
    if (g.components[a].empty()) return detail::concat("block ", a, " is empty");
    for (int i : g.components[a]) {
      if (i < 0 || i >= ring.rank()) return detail::concat("index ", i, " out of range");
      ++seen[i];
    }
  }
  for (int i = 0; i < ring.rank(); ++i)
    if (seen[i] != 1) return detail::concat("index ", i, " appears ", seen[i], " times");
  auto block = g.block_of(ring.rank());
  if (block[0] != g.identity_block) return std::string("unit is not in the identity block");
  for (int i = 0; i < ring.rank(); ++i) {
    if (block[ring.dual(i)] != g.group.inverse(block[i]))
      return detail::concat("dual of ", i, " is not in the inverse block");
    for (int j = 0; j < ring.rank(); ++j) {
      const int target = g.group.mul(block[i], block[j]);
      for (const auto& t : ring.product(i, j))
        if (block[t.index] != target)
          return detail::concat("X_", i, " X_", j, " contains X_", t.index, " outside block ", target);
    }
  }
  return std::nullopt;
}

inline Grading trivial_grading(const FusionRing& ring) {
  Grading g;
  g.components.emplace_back(ring.rank());
  std::iota(g.components[0].begin(), g.components[0].end(), 0);
  return g;
}

namespace detail {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  /// Blocks ordered by smallest member, members sorted.
  std::vector<std::vector<int>> blocks() {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace detail

/// The universal grading. Blocks are the connected components of i ~ k when
/// X_k occurs in I(1) X_i, ordered by smallest basis index, so the adjoint
/// subring is block 0. The group law is sampled from one pair per block pair
/// and then verified over every pair; a disagreement throws
/// InvariantViolation.
inline Grading universal_grading(const FusionRing& ring) {
  const int r = ring.rank();
  const auto i1 = regular_adjoint_element(ring);
  detail::DisjointSets ds(r);
  for (int i = 0; i < r; ++i) {
    auto y = multiply(ring, i1, basic(ring, i));
    for (int k : y.support()) ds.unite(i, k);
  }
  Grading g;
  g.components = ds.blocks();
  const int n = g.num_blocks();
  auto block = g.block_of(r);

  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto p = ring.product(g.components[a][0], g.components[b][0]);
      if (p.empty()) throw InvariantViolation("product of basic elements is zero");
      table[a * n + b] = block[p[0].index];
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& t : ring.product(i, j))
        if (block[t.index] != table[block[i] * n + block[j]])
          throw InvariantViolation(detail::concat(
              "universal grading inconsistent: X_", i, " X_", j, " meets blocks ",
              table[block[i] * n + block[j]], " and ", block[t.index]));
  try {
    g.group = GroupTable::make(n, std::move(table), 0);
  } catch (const StructuralError& e) {
    throw InvariantViolation(std::string("universal grading group law invalid: ") + e.what());
  }
  g.identity_block = 0;
  if (g.components[0] != adjoint_subring(ring).indices())
    throw InvariantViolation("trivial component of the universal grading is not the adjoint subring");
  if (auto bad = grading_defect(ring, g)) throw InvariantViolation("universal grading: " + *bad);
  return g;
}

/// Σ_{i in block} FPdim(X_i)² for each block.
inline std::vector<double> block_masses(const Grading& g, const FPData& fp) {
  std::vector<double> out;
  for (const auto& block : g.components) {
    double s = 0.0;
    for (int i : block) s += fp.dims[i] * fp.dims[i];
    out.push_back(s);
  }
  return out;
}

/// Surjection from the universal grading group onto the group of `given`.
struct GradingMap {
  Grading universal;
  std::vector<int> map;  // universal block -> given block
};

inline GradingMap factor_grading(const FusionRing& ring, const Grading& given) {
  if (auto bad = grading_defect(ring, given)) throw PreconditionError("not a grading: " + *bad);
  GradingMap out{universal_grading(ring), {}};
  const auto given_block = given.block_of(ring.rank());
  const auto& u = out.universal;
  for (int a = 0; a < u.num_blocks(); ++a) {
    const int target = given_block[u.components[a][0]];
    for (int i : u.components[a])
      if (given_block[i] != target)
        throw PreconditionError(detail::concat("universal block ", a, " straddles given blocks ",
                                               target, " and ", given_block[i]));
    out.map.push_back(target);
  }
  for (int a = 0; a < u.num_blocks(); ++a)
    for (int b = 0; b < u.num_blocks(); ++b)
      if (out.map[u.group.mul(a, b)] != given.group.mul(out.map[a], out.map[b]))
        throw InvariantViolation("induced map on grading groups is not a homomorphism");
  std::vector<char> hit(given.num_blocks(), 0);
  for (int x : out.map) hit[x] = 1;
  for (char h : hit)
    if (!h) throw InvariantViolation("induced map on grading groups is not surjective");
  return out;
}

// ---------------------------------------------------------------------------
// Square classes of dimensions

inline long long square_free_part(long long n) {
  if (n <= 0) throw PreconditionError("square_free_part: argument must be positive");
  long long out = 1;
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out * n;
}

struct SquareFreeGrading {
  std::map<long long, std::vector<int>> components;  // n -> basis indices with d^2 in n Z^2
  std::vector<long long> keys;                       // ascending; keys[0] == 1
  GroupTable group;                                  // on positions in `keys`

  int order() const { return group.order(); }
};

/// Grades the basis by the square-free part of d_i². Requires FPdim(R) and
/// every d_i² to be integral within the FP tolerance.
inline SquareFreeGrading dimension_parity_grading(const FusionRing& ring, const FPData& fp) {
  if (!fp.ring_dim_integer)
    throw PreconditionError(detail::concat("FPdim(R) = ", fp.ring_dim, " is not an integer"));
  for (int i = 0; i < ring.rank(); ++i)
    if (!fp.sq_integer_flags[i])
      throw PreconditionError(detail::concat("FPdim(X_", i, ")^2 = ", fp.dims[i] * fp.dims[i],
                                             " is not an integer (index ", i, ")"));
  SquareFreeGrading out;
  std::vector<long long> key_of(ring.rank());
  for (int i = 0; i < ring.rank(); ++i) {
    key_of[i] = square_free_part(std::llround(fp.dims[i] * fp.dims[i]));
    out.components[key_of[i]].push_back(i);
  }
  for (const auto& [n, members] : out.components) out.keys.push_back(n);
  if (out.keys.front() != 1) throw InvariantViolation("unit is not in the integral component");

  const int m = static_cast<int>(out.keys.size());
  auto pos = [&](long long n) -> int {
    auto it = std::lower_bound(out.keys.begin(), out.keys.end(), n);
    if (it == out.keys.end() || *it != n) return -1;
    return static_cast<int>(it - out.keys.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int c = pos(square_free_part(out.keys[a] * out.keys[b]));
      if (c < 0)
        throw InvariantViolation(detail::concat("square classes not closed: ", out.keys[a], " * ",
                                                out.keys[b]));
      table[a * m + b] = c;
    }
  try {
    out.group = GroupTable::make(m, std::move(table), 0);
  } catch (const StructuralError& e) {
    throw InvariantViolation(std::string("square-class group law invalid: ") + e.what());
  }
  for (int a = 0; a < m; ++a)
    if (out.group.mul(a, a) != 0) throw InvariantViolation("square-class group is not elementary abelian");
  for (int i = 0; i < ring.rank(); ++i)
    for (int j = 0; j < ring.rank(); ++j) {
      const long long want = square_free_part(key_of[i] * key_of[j]);
      for (const auto& t : ring.product(i, j))
        if (key_of[t.index] != want)
          throw InvariantViolation(detail::concat("X_", i, " X_", j, " contains X_", t.index,
                                                  " outside square class ", want));
    }
  return out;
}

}  // namespace fusionkit
