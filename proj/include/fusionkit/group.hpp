#pragma once

// Finite groups as exhaustively verified Cayley tables.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "fusionkit/errors.hpp"

namespace fusionkit {

class GroupTable {
 public:
  GroupTable() : order_(1), identity_(0), table_{0}, inverse_{0} {}

  /// Verifies closure, identity law, associativity and two-sided inverses
  /// exhaustively. Throws StructuralError on the first failure.
  static GroupTable make(int order, std::vector<int> table, int identity = 0) {
    if (order <= 0) throw StructuralError("group order must be positive");
    if (static_cast<long>(table.size()) != static_cast<long>(order) * order)
      throw StructuralError(detail::concat("Cayley table has ", table.size(), " entries, expected ",
                                           order * order));
    if (identity < 0 || identity >= order) throw StructuralError("identity out of range");
    GroupTable g;
    g.order_ = order;
    g.identity_ = identity;
    g.table_ = std::move(table);
    for (int x : g.table_)
      if (x < 0 || x >= order) throw StructuralError("Cayley table not closed");
    for (int a = 0; a < order; ++a)
      if (g.mul(identity, a) != a || g.mul(a, identity) != a)
        throw StructuralError(detail::concat("identity law fails at ", a));
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw StructuralError(
                detail::concat("associativity fails at ", detail::tuple_string({a, b, c})));
    g.inverse_.assign(order, -1);
    for (int a = 0; a < order; ++a) {
      int found = -1;
      for (int b = 0; b < order; ++b)
        if (g.mul(a, b) == identity) {
          if (found >= 0) throw StructuralError(detail::concat("inverse of ", a, " not unique"));
          found = b;
        }
      if (found < 0 || g.mul(found, a) != identity)
        throw StructuralError(detail::concat("no two-sided inverse for ", a));
      g.inverse_[a] = found;
    }
    return g;
  }

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<int>& table() const { return table_; }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  int element_order(int a) const {
    int n = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++n;
    return n;
  }

  int power(int a, long e) const {
    int x = identity_;
    for (long t = 0; t < e; ++t) x = mul(x, a);
    return x;
  }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  int order_;
  int identity_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// ---------------------------------------------------------------------------
// Constructions

inline GroupTable cyclic_group(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return GroupTable::make(n, std::move(t));
}

/// (x, y) is encoded as x * |b| + y.
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.order() * b.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * n + y] = a.mul(x / b.order(), y / b.order()) * b.order() +
                     b.mul(x % b.order(), y % b.order());
  return GroupTable::make(n, std::move(t), a.identity() * b.order() + b.identity());
}

using Permutation = std::vector<int>;

/// Closure of the generators under composition (p*q)(x) = p(q(x)). Elements
/// are numbered in lexicographic order, so the identity is element 0.
inline GroupTable permutation_group(const std::vector<Permutation>& gens, int degree) {
  Permutation id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  auto compose = [](const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
    return r;
  };
  std::map<Permutation, int> seen{{id, 0}};
  std::queue<Permutation> todo;
  todo.push(id);
  while (!todo.empty()) {
    auto p = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != degree) throw StructuralError("generator has wrong degree");
      auto q = compose(g, p);
      if (seen.emplace(q, 0).second) todo.push(q);
    }
  }
  std::vector<Permutation> elems;
  for (auto& [p, idx] : seen) {
    idx = static_cast<int>(elems.size());
    elems.push_back(p);
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = seen.at(compose(elems[a], elems[b]));
  return GroupTable::make(n, std::move(t), seen.at(id));
}

inline GroupTable symmetric_group(int n) {
  if (n == 1) return GroupTable();
  Permutation swap(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  return permutation_group({swap, cycle}, n);
}

/// Symmetries of the n-gon, order 2n.
inline GroupTable dihedral_group(int n) {
  Permutation rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return permutation_group({rot, refl}, n);
}

inline GroupTable alternating_group_4() {
  return permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4);
}

/// Q8 with elements 1, -1, i, -i, j, -j, k, -k in that order.
inline GroupTable quaternion_group() {
  // unit products: basis 0=1, 1=i, 2=j, 3=k; result (sign, unit)
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      auto [s, u] = units[a / 2][b / 2];
      sign *= s;
      t[a * 8 + b] = 2 * u + (sign < 0 ? 1 : 0);
    }
  return GroupTable::make(8, std::move(t));
}

/// Z_{n1} x Z_{n2} x ... (empty list gives the trivial group).
inline GroupTable abelian_group_from_factors(const std::vector<int>& factors) {
  GroupTable g;
  for (int n : factors) g = direct_product(g, cyclic_group(n));
  return g;
}

// ---------------------------------------------------------------------------
// Subgroups and quotients

inline std::vector<int> subgroup_closure(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        int y = g.mul(x, s);
        if (!in[y]) in[y] = 1, next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

inline bool is_normal_subgroup(const GroupTable& g, const std::vector<int>& h) {
  std::vector<char> in(g.order(), 0);
  for (int x : h) in[x] = 1;
  for (int a = 0; a < g.order(); ++a)
    for (int x : h)
      if (!in[g.mul(g.mul(a, x), g.inverse(a))]) return false;
  return true;
}

struct Quotient {
  GroupTable group;
  std::vector<int> map;  // element -> coset index
};

/// G/N with cosets numbered by their smallest element.
inline Quotient quotient_group(const GroupTable& g, const std::vector<int>& normal) {
  if (!is_normal_subgroup(g, normal)) throw PreconditionError("quotient by a non-normal subgroup");
  std::vector<int> map(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (map[a] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : normal) map[g.mul(a, x)] = c;
  }
  const int n = static_cast<int>(reps.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = map[g.mul(reps[a], reps[b])];
  return {GroupTable::make(n, std::move(t), map[g.identity()]), std::move(map)};
}

inline std::vector<int> commutator_subgroup(const GroupTable& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(g, comms);
}

/// Maximal abelian quotient G/[G,G] together with the quotient map.
inline Quotient abelianization(const GroupTable& g) {
  return quotient_group(g, commutator_subgroup(g));
}

namespace detail {

inline std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace detail

/// Invariant factors n1 | n2 | ... of a finite abelian group, ascending; the
/// trivial group gives an empty list. Each p-primary part is recovered from
/// the counts #{x : x^(p^k) = 1}, which equal p^(Σ_i min(λ_i, k)).
inline std::vector<int> invariant_factors(const GroupTable& g) {
  if (!g.is_abelian()) throw PreconditionError("invariant_factors: group is not abelian");
  std::vector<std::vector<int>> parts;  // per prime, descending exponents λ_1 >= λ_2 >= ...
  std::vector<int> primes = detail::prime_factors(g.order());
  for (int p : primes) {
    std::vector<int> at_least;  // at_least[k-1] = #{i : λ_i >= k}
    long prev_exp = 0;
    long pk = p;
    while (true) {
      int count = 0;
      for (int x = 0; x < g.order(); ++x)
        if (g.power(x, pk) == g.identity()) ++count;
      long e = 0;
      for (int c = count; c > 1; c /= p) ++e;
      if (e == prev_exp) break;
      at_least.push_back(static_cast<int>(e - prev_exp));
      prev_exp = e;
      pk *= p;
    }
    std::vector<int> lambda;
    const int nparts = at_least.empty() ? 0 : at_least.front();
    for (int i = 1; i <= nparts; ++i) {
      int len = 0;
      for (int c : at_least)
        if (c >= i) ++len;
      lambda.push_back(len);
    }
    parts.push_back(lambda);
  }
  std::size_t width = 0;
  for (const auto& l : parts) width = std::max(width, l.size());
  std::vector<int> factors;
  for (std::size_t t = 0; t < width; ++t) {
    int f = 1;
    for (std::size_t q = 0; q < primes.size(); ++q)
      if (t < parts[q].size())
        for (int e = 0; e < parts[q][t]; ++e) f *= primes[q];
    factors.push_back(f);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

/// The character group of a finite abelian group, realized as the
/// (non-canonically) isomorphic product of cyclic groups.
inline GroupTable character_group(const GroupTable& g) {
  if (!g.is_abelian()) throw PreconditionError("character_group: group is not abelian");
  return abelian_group_from_factors(invariant_factors(g));
}

/// Returns an isomorphism a -> b (as an element map) if one exists. Brute
/// force over images of a small generating set; fine for orders <= 64.
inline std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  std::map<int, int> hist_a, hist_b;
  for (int x = 0; x < n; ++x) {
    ++hist_a[a.element_order(x)];
    ++hist_b[b.element_order(x)];
  }
  if (hist_a != hist_b) return std::nullopt;

  std::vector<int> gens;
  for (int x = 0; x < n && static_cast<int>(subgroup_closure(a, gens).size()) < n; ++x) {
    auto with = gens;
    with.push_back(x);
    if (subgroup_closure(a, with).size() > subgroup_closure(a, gens).size()) gens = with;
  }

  std::vector<int> images(gens.size());
  std::function<std::optional<std::vector<int>>(std::size_t)> search =
      [&](std::size_t depth) -> std::optional<std::vector<int>> {
    if (depth == gens.size()) {
      // Extend along words in the generators; reject on any inconsistency.
      std::vector<int> phi(n, -1);
      phi[a.identity()] = b.identity();
      std::vector<int> frontier{a.identity()};
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
          for (std::size_t s = 0; s < gens.size(); ++s) {
            int y = a.mul(x, gens[s]);
            int img = b.mul(phi[x], images[s]);
            if (phi[y] < 0) {
              phi[y] = img;
              next.push_back(y);
            } else if (phi[y] != img) {
              return std::nullopt;
            }
          }
        frontier = std::move(next);
      }
      std::vector<char> hit(n, 0);
      for (int x = 0; x < n; ++x) {
        if (phi[x] < 0 || hit[phi[x]]) return std::nullopt;
        hit[phi[x]] = 1;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return std::nullopt;
      return phi;
    }
    const int ord = a.element_order(gens[depth]);
    for (int y = 0; y < n; ++y) {
      if (b.element_order(y) != ord) continue;
      images[depth] = y;
      if (auto r = search(depth + 1)) return r;
    }
    return std::nullopt;
  };
  return search(0);
}

inline bool isomorphic(const GroupTable& a, const GroupTable& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace fusionkit
