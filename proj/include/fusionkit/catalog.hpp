#pragma once

// Built-in rings and modular data: group rings, character rings of small
// groups, Tambara-Yamagami rings, SU(2)_k and a few named modular
// categories, each with the structural facts it is expected to satisfy.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/group.hpp"
#include "fusionkit/modular.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

/// N_ij^k = [g_i g_j = g_k], dual = inverse.
inline FusionRing group_ring(const GroupTable& g, std::vector<std::string> labels = {}) {
  if (g.identity() != 0) throw PreconditionError("group_ring: identity must be element 0");
  const int n = g.order();
  std::vector<int> dual(n);
  std::vector<Entry> entries;
  for (int a = 0; a < n; ++a) {
    dual[a] = g.inverse(a);
    for (int b = 0; b < n; ++b) entries.push_back({a, b, g.mul(a, b), 1});
  }
  if (labels.empty())
    for (int a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  return FusionRing::make(n, std::move(dual), std::move(entries), std::move(labels));
}

struct CharacterTable {
  std::vector<int> class_sizes;
  std::vector<std::vector<Complex>> chi;  // chi[irrep][class]
  std::vector<std::string> labels;

  int group_order() const {
    int s = 0;
    for (int c : class_sizes) s += c;
    return s;
  }
};

namespace detail {

inline Complex root_of_unity(int n, int k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * k / n);
}

inline CharacterTable cyclic_table(int n) {
  CharacterTable t;
  t.class_sizes.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    std::vector<Complex> row(n);
    for (int m = 0; m < n; ++m) row[m] = root_of_unity(n, (a * m) % n);
    t.chi.push_back(std::move(row));
    t.labels.push_back("chi" + std::to_string(a));
  }
  return t;
}

}  // namespace detail

inline const std::vector<std::string>& character_table_names() {
  static const std::vector<std::string> names = {
      "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12",
      "Z2xZ2", "S3", "D4", "Q8", "A4", "S4", "Z7:Z3"};
  return names;
}

/// Irreducible characters, trivial character first.
inline CharacterTable character_table(const std::string& name) {
  using C = Complex;
  const C w = detail::root_of_unity(3, 1);
  const C w2 = std::conj(w);
  if (name.size() >= 2 && name[0] == 'Z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 12) return detail::cyclic_table(n);
  }
  if (name == "Z2xZ2")
    return {{1, 1, 1, 1},
            {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}},
            {"1", "a", "b", "ab"}};
  if (name == "S3")
    // classes: e, transpositions, 3-cycles
    return {{1, 3, 2}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}, {"1", "sgn", "std"}};
  if (name == "D4" || name == "Q8")
    // classes: e, central involution, then the three classes of size 2
    return {{1, 1, 2, 2, 2},
            {{1, 1, 1, 1, 1},
             {1, 1, 1, -1, -1},
             {1, 1, -1, 1, -1},
             {1, 1, -1, -1, 1},
             {2, -2, 0, 0, 0}},
            {"1", "l1", "l2", "l3", "V"}};
  if (name == "A4")
    // classes: e, (12)(34), (123), (132)
    return {{1, 3, 4, 4},
            {{1, 1, 1, 1}, {1, 1, w, w2}, {1, 1, w2, w}, {3, -1, 0, 0}},
            {"1", "w", "w2", "V"}};
  if (name == "S4")
    // classes: e, (12), (12)(34), (123), (1234)
    return {{1, 6, 3, 8, 6},
            {{1, 1, 1, 1, 1},
             {1, -1, 1, 1, -1},
             {2, 0, 2, -1, 0},
             {3, 1, -1, 0, -1},
             {3, -1, -1, 0, 1}},
            {"1", "sgn", "W", "V", "V'"}};
  if (name == "Z7:Z3") {
    // classes: e, {a, a^2, a^4}, {a^3, a^5, a^6}, b, b^2
    const C eta(-0.5, std::sqrt(7.0) / 2.0);
    return {{1, 3, 3, 7, 7},
            {{1, 1, 1, 1, 1},
             {1, 1, 1, w, w2},
             {1, 1, 1, w2, w},
             {3, eta, std::conj(eta), 0, 0},
             {3, std::conj(eta), eta, 0, 0}},
            {"1", "w", "w2", "V", "V*"}};
  }
  throw PreconditionError("unknown group '" + name + "'");
}

/// Worst deviation from row and column orthogonality of a character table.
inline double character_table_defect(const CharacterTable& t) {
  const int n = static_cast<int>(t.chi.size());
  const int g = t.group_order();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex s = 0.0;
      for (int c = 0; c < n; ++c) s += static_cast<double>(t.class_sizes[c]) * t.chi[a][c] * std::conj(t.chi[b][c]);
      worst = std::max(worst, std::abs(s - Complex(a == b ? g : 0, 0)));
    }
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < n; ++e) {
      Complex s = 0.0;
      for (int a = 0; a < n; ++a) s += t.chi[a][c] * std::conj(t.chi[a][e]);
      const double want = c == e ? static_cast<double>(g) / t.class_sizes[c] : 0.0;
      worst = std::max(worst, std::abs(s - Complex(want, 0)));
    }
  return worst;
}

/// Grothendieck ring of Rep(G) from its character table.
inline FusionRing character_ring(const std::string& group_name) {
  const auto t = character_table(group_name);
  const int n = static_cast<int>(t.chi.size());
  const double g = t.group_order();
  constexpr double exact = 1e-9;
  std::vector<int> dual(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double diff = 0.0;
      for (int c = 0; c < n; ++c) diff = std::max(diff, std::abs(t.chi[b][c] - std::conj(t.chi[a][c])));
      if (diff < exact) dual[a] = b;
    }
  for (int a = 0; a < n; ++a)
    if (dual[a] < 0) throw InvariantViolation("character table is not closed under conjugation");
  std::vector<Entry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex s = 0.0;
        for (int c = 0; c < n; ++c)
          s += static_cast<double>(t.class_sizes[c]) * t.chi[i][c] * t.chi[j][c] * std::conj(t.chi[k][c]);
        s /= g;
        const double m = std::round(s.real());
        if (std::abs(s - Complex(m, 0)) > exact || m < 0)
          throw InvariantViolation(detail::concat("character table for ", group_name,
                                                  " gives non-integral multiplicity at ",
                                                  detail::tuple_string({i, j, k})));
        if (m > 0) entries.push_back({i, j, k, static_cast<long long>(m)});
      }
  return FusionRing::make(n, std::move(dual), std::move(entries), t.labels);
}

/// A plus a self-dual m with a·m = m·a = m and m·m = Σ_a a.
inline FusionRing tambara_yamagami(const GroupTable& a, std::vector<std::string> group_labels = {}) {
  if (!a.is_abelian()) throw PreconditionError("tambara_yamagami requires an abelian group");
  if (a.identity() != 0) throw PreconditionError("tambara_yamagami: identity must be element 0");
  const int n = a.order();
  const int m = n;
  std::vector<int> dual(n + 1);
  std::vector<Entry> entries;
  for (int x = 0; x < n; ++x) {
    dual[x] = a.inverse(x);
    for (int y = 0; y < n; ++y) entries.push_back({x, y, a.mul(x, y), 1});
    entries.push_back({x, m, m, 1});
    entries.push_back({m, x, m, 1});
    entries.push_back({m, m, x, 1});
  }
  dual[m] = m;
  if (group_labels.empty())
    for (int x = 0; x < n; ++x) group_labels.push_back("a" + std::to_string(x));
  group_labels.push_back("m");
  return FusionRing::make(n + 1, std::move(dual), std::move(entries), std::move(group_labels));
}

// ---------------------------------------------------------------------------
// Catalog entries

/// An expected property: an integer, an integer list, or "absent".
struct Expected {
  std::variant<std::monostate, long long, std::vector<int>> value;
  std::string source;

  bool absent() const { return std::holds_alternative<std::monostate>(value); }
  long long integer() const { return std::get<long long>(value); }
  const std::vector<int>& list() const { return std::get<std::vector<int>>(value); }
};

struct CatalogEntry {
  std::string name;
  std::string description;
  FusionRing ring;
  std::optional<ModularData> modular;
  std::map<std::string, Expected> expected;
};

namespace detail {

struct Facts {
  std::optional<int> nilpotency_class;
  int universal_order;
  std::optional<std::vector<int>> universal_factors;  // only for abelian U
  int pointed_size;
  int adjoint_size;
  std::optional<int> parity_order;  // |E| when FPdim(R) and every d² are integers
  std::string source;
};

inline std::map<std::string, Expected> expected_map(const Facts& f) {
  std::map<std::string, Expected> m;
  m["nilpotency_class"] = {f.nilpotency_class ? Expected{static_cast<long long>(*f.nilpotency_class), f.source}
                                              : Expected{std::monostate{}, f.source}};
  m["universal_grading_order"] = {static_cast<long long>(f.universal_order), f.source};
  if (f.universal_factors) m["universal_grading_factors"] = {*f.universal_factors, f.source};
  m["pointed_size"] = {static_cast<long long>(f.pointed_size), f.source};
  m["adjoint_size"] = {static_cast<long long>(f.adjoint_size), f.source};
  if (f.parity_order) m["parity_grading_order"] = {static_cast<long long>(*f.parity_order), f.source};
  return m;
}

inline ModularData modular_from_real(int rank, std::vector<int> dual, const std::vector<double>& s,
                                     std::vector<Complex> theta, std::vector<std::string> labels) {
  std::vector<Complex> sc(s.begin(), s.end());
  return ModularData::make(rank, std::move(dual), std::move(sc), std::move(theta), std::move(labels));
}

}  // namespace detail

inline ModularData ising_modular() {
  const double r2 = std::sqrt(2.0);
  return detail::modular_from_real(3, {0, 1, 2}, {1, 1, r2, 1, 1, -r2, r2, -r2, 0},
                                   {1.0, -1.0, std::polar(1.0, std::numbers::pi / 8)},
                                   {"1", "psi", "sigma"});
}

inline ModularData fibonacci_modular() {
  const double phi = std::numbers::phi;
  return detail::modular_from_real(2, {0, 1}, {1, phi, phi, -1},
                                   {1.0, std::polar(1.0, 4 * std::numbers::pi / 5)}, {"1", "tau"});
}

inline ModularData toric_code_modular() {
  return detail::modular_from_real(4, {0, 1, 2, 3},
                                   {1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1},
                                   {1.0, 1.0, 1.0, -1.0}, {"1", "e", "m", "f"});
}

inline ModularData su2_modular(int k) {
  if (k < 1 || k > 8) throw PreconditionError("su2_level_k: level must be in 1..8");
  const int r = k + 1;
  const double pi = std::numbers::pi;
  const double s0 = std::sin(pi / (k + 2));
  std::vector<double> s(static_cast<std::size_t>(r) * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) s[a * r + b] = std::sin(pi * (a + 1) * (b + 1) / (k + 2)) / s0;
  std::vector<Complex> theta(r);
  std::vector<int> dual(r);
  std::vector<std::string> labels(r);
  for (int a = 0; a < r; ++a) {
    theta[a] = std::polar(1.0, pi * a * (a + 2) / (2.0 * (k + 2)));
    dual[a] = a;
    labels[a] = std::to_string(a);
  }
  return detail::modular_from_real(r, std::move(dual), s, std::move(theta), std::move(labels));
}

/// N_il^j = 1 iff |i - l| <= j <= min(i + l, 2k - i - l) and i + l + j is even.
inline FusionRing su2_fusion_ring(int k) {
  if (k < 1 || k > 8) throw PreconditionError("su2_level_k: level must be in 1..8");
  const int r = k + 1;
  std::vector<int> dual(r);
  std::vector<std::string> labels(r);
  std::vector<Entry> entries;
  for (int i = 0; i < r; ++i) {
    dual[i] = i;
    labels[i] = std::to_string(i);
    for (int l = 0; l < r; ++l)
      for (int j = std::abs(i - l); j <= std::min(i + l, 2 * k - i - l); j += 2) entries.push_back({i, l, j, 1});
  }
  return FusionRing::make(r, std::move(dual), std::move(entries), std::move(labels));
}

/// Fails loudly if the stored data is inconsistent.
inline void verify_catalog_entry(const CatalogEntry& e) {
  auto rep = validate_ring(e.ring);
  if (!rep.passed())
    throw InvariantViolation("catalog entry " + e.name + " violates " + rep.violations[0].axiom);
  if (e.modular) {
    auto mrep = validate_modular(*e.modular);
    if (!mrep.passed())
      throw InvariantViolation("catalog modular data " + e.name + " violates " + mrep.violations[0].axiom);
    if (!(verlinde_fusion(*e.modular).ring == e.ring))
      throw InvariantViolation("catalog entry " + e.name + ": Verlinde ring differs from stored ring");
  }
}

inline CatalogEntry su2_level_k(int k) {
  CatalogEntry e;
  e.name = "su2_" + std::to_string(k);
  e.description = "SU(2) at level " + std::to_string(k);
  e.ring = su2_fusion_ring(k);
  e.modular = su2_modular(k);
  detail::Facts f;
  f.nilpotency_class = k == 1 ? std::optional<int>(1) : k == 2 ? std::optional<int>(2) : std::nullopt;
  f.universal_order = 2;
  f.universal_factors = std::vector<int>{2};
  f.pointed_size = 2;
  f.adjoint_size = k / 2 + 1;
  // FPdim = (k+2) / (2 sin²(π/(k+2))) is an integer only for k = 1, 2, 4.
  if (k == 1) f.parity_order = 1;
  if (k == 2 || k == 4) f.parity_order = 2;
  f.source = "quantum-group fusion rules; even/odd spins";
  e.expected = detail::expected_map(f);
  verify_catalog_entry(e);
  return e;
}

inline CatalogEntry named_modular(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  detail::Facts f;
  if (name == "ising") {
    e.description = "Ising modular category";
    e.modular = ising_modular();
    f = {2, 2, std::vector<int>{2}, 2, 2, 2, "Ising fusion rules"};
  } else if (name == "fibonacci") {
    e.description = "Fibonacci modular category";
    e.modular = fibonacci_modular();
    f = {std::nullopt, 1, std::vector<int>{}, 1, 2, std::nullopt, "tau^2 = 1 + tau"};
  } else if (name == "toric_code") {
    e.description = "toric code, the center of Vec(Z2)";
    e.modular = toric_code_modular();
    f = {1, 4, std::vector<int>{2, 2}, 4, 1, 1, "pointed with group Z2xZ2"};
  } else {
    throw PreconditionError("unknown modular data '" + name + "'");
  }
  e.ring = verlinde_fusion(*e.modular).ring;
  e.expected = detail::expected_map(f);
  verify_catalog_entry(e);
  return e;
}

namespace detail {

inline CatalogEntry make_entry(std::string name, std::string description, FusionRing ring,
                               const Facts& f) {
  CatalogEntry e{std::move(name), std::move(description), std::move(ring), std::nullopt,
                 expected_map(f)};
  verify_catalog_entry(e);
  return e;
}

struct CatalogRecipe {
  const char* name;
  std::function<CatalogEntry()> build;
};

inline const std::vector<CatalogRecipe>& catalog_recipes() {
  static const std::vector<CatalogRecipe> recipes = [] {
    std::vector<CatalogRecipe> v;
    const std::string grp = "pointed: U is the group itself";
    auto zg = [&](const char* name, std::function<GroupTable()> g, std::optional<std::vector<int>> factors) {
      v.push_back({name, [name, g, factors, grp] {
                     const auto G = g();
                     return make_entry(name, std::string("group ring of order ") + std::to_string(G.order()),
                                       group_ring(G), {1, G.order(), factors, G.order(), 1, 1, grp});
                   }});
    };
    v.push_back({"trivial", [] {
                   return make_entry("trivial", "rank-one ring Z", group_ring(GroupTable()),
                                     {0, 1, std::vector<int>{}, 1, 1, 1, "rank one"});
                 }});
    zg("zg_z2", [] { return cyclic_group(2); }, std::vector<int>{2});
    zg("zg_z3", [] { return cyclic_group(3); }, std::vector<int>{3});
    zg("zg_z4", [] { return cyclic_group(4); }, std::vector<int>{4});
    zg("zg_z2xz2", [] { return abelian_group_from_factors({2, 2}); }, std::vector<int>{2, 2});
    zg("zg_s3", [] { return symmetric_group(3); }, std::nullopt);
    zg("zg_d4", [] { return dihedral_group(4); }, std::nullopt);
    zg("zg_q8", [] { return quaternion_group(); }, std::nullopt);

    // U(Rep G) is dual to Z(G); the adjoint part is Rep(G/Z(G)); the pointed
    // part is dual to G/[G,G].
    const std::string rep = "U dual to the center; pointed part dual to the abelianization";
    auto rg = [&](const char* name, const char* group, Facts f) {
      f.source = rep;
      v.push_back({name, [name, group, f] {
                     return make_entry(name, std::string("representation ring of ") + group,
                                       character_ring(group), f);
                   }});
    };
    rg("rep_s3", "S3", {std::nullopt, 1, std::vector<int>{}, 2, 3, 1, ""});
    rg("rep_d4", "D4", {2, 2, std::vector<int>{2}, 4, 4, 1, ""});
    rg("rep_q8", "Q8", {2, 2, std::vector<int>{2}, 4, 4, 1, ""});
    rg("rep_a4", "A4", {std::nullopt, 1, std::vector<int>{}, 3, 4, 1, ""});
    rg("rep_s4", "S4", {std::nullopt, 1, std::vector<int>{}, 2, 5, 1, ""});
    rg("rep_z7z3", "Z7:Z3", {std::nullopt, 1, std::vector<int>{}, 3, 5, 1, ""});
    rg("rep_z2xz2", "Z2xZ2", {1, 4, std::vector<int>{2, 2}, 4, 1, 1, ""});
    rg("rep_z5", "Z5", {1, 5, std::vector<int>{5}, 5, 1, 1, ""});

    const std::string ty = "m^2 = sum of the group; U = Z2 separating group from m";
    auto tyr = [&](const char* name, std::function<GroupTable()> g, int parity) {
      v.push_back({name, [name, g, parity, ty] {
                     const auto A = g();
                     return make_entry(name,
                                       std::string("Tambara-Yamagami ring of an abelian group of order ") +
                                           std::to_string(A.order()),
                                       tambara_yamagami(A), {2, 2, std::vector<int>{2}, A.order(), A.order(), parity, ty});
                   }});
    };
    tyr("ty_z2", [] { return cyclic_group(2); }, 2);
    tyr("ty_z3", [] { return cyclic_group(3); }, 2);
    tyr("ty_z2xz2", [] { return abelian_group_from_factors({2, 2}); }, 1);
    tyr("ty_z4", [] { return cyclic_group(4); }, 1);

    for (const char* n : {"ising", "fibonacci", "toric_code"})
      v.push_back({n, [n] { return named_modular(n); }});
    static const char* su2_names[] = {"su2_1", "su2_2", "su2_3", "su2_4", "su2_5", "su2_6", "su2_7", "su2_8"};
    for (int k = 1; k <= 8; ++k) v.push_back({su2_names[k - 1], [k] { return su2_level_k(k); }});
    return v;
  }();
  return recipes;
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& r : detail::catalog_recipes()) out.emplace_back(r.name);
  return out;
}

inline CatalogEntry catalog_entry(const std::string& name) {
  for (const auto& r : detail::catalog_recipes())
    if (name == r.name) return r.build();
  throw PreconditionError("unknown catalog entry '" + name + "'");
}

}  // namespace fusionkit
