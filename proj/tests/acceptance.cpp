// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "fusionkit/catalog.hpp"
#include "fusionkit/module.hpp"
#include "fusionkit/modular.hpp"
#include "fusionkit/series.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what;
      ok = false;
    }
  }
};

std::vector<CatalogEntry> entries() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> v;
    for (const auto& name : catalog_names()) v.push_back(catalog_entry(name));
    return v;
  }();
  return all;
}

const CatalogEntry& entry(const std::string& name) {
  static const auto all = entries();
  for (const auto& e : all)
    if (e.name == name) return e;
  throw PreconditionError("no catalog entry " + name);
}

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

// 1. Catalog rings pass; single-entry mutations are classified by the dense
// oracle, and every invalid mutant must be rejected while every valid one
// (a perturbation can land on another fusion ring) must be accepted.
void axiom_suite(Outcome& out) {
  std::mt19937_64 rng(20240607);
  int invalid = 0, caught = 0, valid = 0, accepted = 0;
  for (const auto& e : entries()) {
    out.require(validate_ring(e.ring).passed(), e.name + " fails validation");
    const auto base = oracle::dense(e.ring);
    for (int t = 0; t < 100; ++t) {
      const auto m = oracle::mutate(base, rng);
      const auto ring = oracle::to_ring(m);
      bool rejected = !validate_ring(ring).passed();
      if (!rejected) {
        try {
          universal_grading(ring);
        } catch (const InvariantViolation&) {
          rejected = true;
        }
      }
      if (oracle::is_fusion_ring(m)) {
        ++valid;
        if (!rejected) ++accepted;
        else out.require(false, e.name + ": valid mutant rejected");
      } else {
        ++invalid;
        if (rejected) ++caught;
        else out.require(false, e.name + ": invalid mutant accepted");
      }
    }
  }
  out.note << (out.ok ? "" : "; ") << entries().size() << " rings; " << caught << "/" << invalid
           << " invalid mutants caught, " << accepted << "/" << valid << " valid mutants accepted";
}

void fp_dims(Outcome& out) {
  auto is = fp_dimensions(entry("ising").ring);
  out.require(std::abs(is.dims[0] - 1) <= 1e-9 && std::abs(is.dims[1] - 1) <= 1e-9 &&
                  std::abs(is.dims[2] - std::sqrt(2.0)) <= 1e-9,
              "Ising dims");
  auto fib = fp_dimensions(entry("fibonacci").ring);
  out.require(std::abs(fib.dims[1] - std::numbers::phi) <= 1e-9, "Fibonacci d_tau");
  double worst = 0;
  for (const auto& e : entries()) worst = std::max(worst, fp_dimensions(e.ring).homomorphism_residual);
  out.require(worst < 1e-8, "homomorphism residual");
  out.note << (out.ok ? "" : "; ") << "worst homomorphism residual " << worst;
}

void universal_grading_masses(Outcome& out) {
  double worst = 0;
  for (const auto& e : entries()) {
    auto fp = fp_dimensions(e.ring);
    auto u = universal_grading(e.ring);
    for (double m : block_masses(u, fp)) worst = std::max(worst, std::abs(m - fp.ring_dim / u.group.order()));
    try {
      factor_grading(e.ring, trivial_grading(e.ring));
    } catch (const std::exception& ex) {
      out.require(false, e.name + " trivial grading: " + ex.what());
    }
  }
  out.require(worst <= 1e-8, "block masses");
  const auto& z4 = entry("zg_z4").ring;
  Grading parity;
  parity.components = {{0, 2}, {1, 3}};
  parity.group = cyclic_group(2);
  try {
    auto f = factor_grading(z4, parity);
    out.require(f.map == std::vector<int>{0, 1, 0, 1}, "Z4 -> Z2 map");
  } catch (const std::exception& ex) {
    out.require(false, std::string("Z4 -> Z2: ") + ex.what());
  }
  out.note << (out.ok ? "" : "; ") << "worst |mass - FPdim/|U|| " << worst;
}

void nilpotency_classes(Outcome& out) {
  int checked = 0;
  auto want = [&](const std::string& name, std::optional<int> c) {
    out.require(nilpotency_class(entry(name).ring) == c, name);
    ++checked;
  };
  for (const auto& e : entries())
    if (e.name.rfind("zg_", 0) == 0) want(e.name, 1);
  for (const char* n : {"ty_z2", "ty_z3", "ty_z2xz2", "rep_d4", "rep_q8"}) want(n, 2);
  for (const char* n : {"rep_s3", "rep_s4", "rep_z7z3", "fibonacci", "su2_3"}) want(n, std::nullopt);
  out.note << (out.ok ? "" : "; ") << checked << " rings";
}

void series_duality(Outcome& out) {
  int commutative = 0, nilpotent = 0;
  for (const auto& e : entries()) {
    if (!is_commutative(e.ring)) continue;
    ++commutative;
    auto rep = verify_series_duality(e.ring);
    out.require(rep.passed(), e.name);
    if (rep.upper.nilpotency_class) {
      ++nilpotent;
      out.require(static_cast<int>(rep.inclusions.size()) == *rep.upper.nilpotency_class + 1,
                  e.name + " inclusions");
    }
  }
  out.note << (out.ok ? "" : "; ") << commutative << " commutative rings, " << nilpotent << " nilpotent";
}

void parity_grading(Outcome& out) {
  int integral = 0;
  for (const char* n : {"ising", "ty_z3"}) {
    const auto& ring = entry(n).ring;
    auto e = dimension_parity_grading(ring, fp_dimensions(ring));
    out.require(e.order() == 2, std::string(n) + " |E| = 2");
  }
  for (const auto& e : entries()) {
    auto fp = fp_dimensions(e.ring);
    if (!fp.ring_dim_integer) continue;
    ++integral;
    out.require(all_true(fp.sq_integer_flags), e.name + ": integer FPdim but some d^2 is not");
    if (!all_true(fp.sq_integer_flags)) continue;
    auto g = dimension_parity_grading(e.ring, fp);
    out.require((g.order() > 1) == !all_true(fp.integer_flags), e.name + ": E nontrivial iff irrational dims");
  }
  const auto& z7 = entry("rep_z7z3").ring;
  auto fp = fp_dimensions(z7);
  out.require(std::abs(fp.ring_dim - 21) <= 1e-9 && all_true(fp.integer_flags), "Rep(Z7:Z3) dims integral");
  out.require(dimension_parity_grading(z7, fp).order() == 1, "Rep(Z7:Z3) E trivial");
  out.note << (out.ok ? "" : "; ") << integral << " rings with integer FPdim";
}

void divisibility(Outcome& out) {
  int rings = 0;
  for (const auto& e : entries()) {
    if (!nilpotency_class(e.ring)) continue;
    ++rings;
    auto fp = fp_dimensions(e.ring);
    auto m = regular_module(e.ring);
    auto rep = divisibility_report(e.ring, m, fp, module_fp_data(e.ring, m, fp));
    out.require(rep.all_integer(), e.name);
  }
  const auto& q8 = entry("rep_q8").ring;
  auto fp = fp_dimensions(q8);
  auto m = regular_module(q8);
  auto rep = divisibility_report(q8, m, fp, module_fp_data(q8, m, fp));
  for (const auto& r : rep.ring_ratios) {
    const double want = std::llround(fp.dims[r.basic]) == 1 ? 4.0 : 1.0;
    out.require(std::abs(r.ratio - want) <= 1e-7, "Rep(Q8) ratio at " + std::to_string(r.basic));
  }
  out.note << (out.ok ? "" : "; ") << rings << " nilpotent rings";
}

void verlinde(Outcome& out) {
  double worst = 0;
  std::vector<std::string> names = {"ising", "fibonacci", "toric_code"};
  for (int k = 1; k <= 8; ++k) names.push_back("su2_" + std::to_string(k));
  for (const auto& n : names) {
    const auto& e = entry(n);
    auto v = verlinde_fusion(*e.modular);
    out.require(v.ring == e.ring, n + " ring");
    worst = std::max(worst, v.residual);
  }
  out.require(worst < 1e-8, "residual");
  out.note << (out.ok ? "" : "; ") << names.size() << " entries, worst residual " << worst;
}

void schneider(Outcome& out) {
  int n = 0;
  double spread = 0;
  for (const auto& e : entries()) {
    if (!e.modular) continue;
    ++n;
    auto rep = schneider_iso_check(*e.modular, e.ring);
    out.require(rep.passed(), e.name);
    out.require(rep.block_spread <= 1e-8, e.name + " spread");
    spread = std::max(spread, rep.block_spread);
  }
  auto factors = [](const std::string& name) {
    const auto& e = entry(name);
    return schneider_iso_check(*e.modular, e.ring).u_factors;
  };
  out.require(factors("ising") == std::vector<int>{2}, "Ising [2]");
  out.require(factors("toric_code") == std::vector<int>{2, 2}, "toric code [2,2]");
  out.require(factors("fibonacci").empty(), "Fibonacci []");
  out.note << (out.ok ? "" : "; ") << n << " modular entries, worst block spread " << spread;
}

void central_series(Outcome& out) {
  int n = 0;
  for (const auto& e : entries()) {
    if (!e.modular) continue;
    ++n;
    out.require(central_series_centralizer_check(*e.modular, e.ring).passed(), e.name);
  }
  const auto& is = entry("ising");
  auto rep = central_series_centralizer_check(*is.modular, is.ring);
  out.require(rep.adjoint.indices() == std::vector<int>{0, 1}, "Ising C_ad");
  out.require(rep.pointed_centralizer.indices() == std::vector<int>{0, 1}, "Ising (C_pt)'");
  out.require(std::find(rep.symmetric_terms.begin(), rep.symmetric_terms.end(), 1) != rep.symmetric_terms.end(),
              "Ising C^(1) symmetric");
  out.note << (out.ok ? "" : "; ") << n << " modular entries";
}

void mueger(Outcome& out) {
  int subcats = 0;
  double worst = 0;
  for (const auto& e : entries()) {
    if (!e.modular || e.ring.rank() > 10) continue;
    for (const auto& k : enumerate_subcats(e.ring)) {
      ++subcats;
      auto dc = double_centralizer_check(*e.modular, e.ring, k);
      out.require(dc.double_equal, e.name + " k'' = k");
      const double dev = std::abs(dc.dim_k * dc.dim_k1 - dc.global_dim);
      worst = std::max(worst, dev);
      out.require(dev <= 1e-7, e.name + " dim k dim k' = D");
      out.require(centralizer_identity_check(*e.modular, e.ring, k).holds, e.name + " (K_ad)' = (K')^co");
    }
  }
  out.note << (out.ok ? "" : "; ") << subcats << " subcategories, worst |dim k dim k' - D| " << worst;
}

std::string capture(const std::string& cmd, int& code) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  code = pclose(p);
  return out;
}

void determinism(Outcome& out) {
  int n = 0;
  for (const auto& name : catalog_names()) {
    const std::string cmd = "'" FUSIONKIT_BIN "' analyze --format json --catalog " + name + " 2>/dev/null";
    int c1 = 0, c2 = 0;
    const auto a = capture(cmd, c1);
    const auto b = capture(cmd, c2);
    out.require(c1 == 0 && c2 == 0 && !a.empty(), name + " exit status");
    out.require(a == b, name + " output differs");
    ++n;
  }
  out.note << (out.ok ? "" : "; ") << n << " entries run twice";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"axiom suite and mutation detection", axiom_suite},
      {"Frobenius-Perron dimensions", fp_dims},
      {"universal grading masses and factorization", universal_grading_masses},
      {"nilpotency classes", nilpotency_classes},
      {"upper/lower central series duality", series_duality},
      {"square-class grading", parity_grading},
      {"divisibility of FP dimensions", divisibility},
      {"Verlinde recovery", verlinde},
      {"universal grading vs invertibles", schneider},
      {"central series and centralizers", central_series},
      {"double centralizers and (K_ad)' = (K')^co", mueger},
      {"byte-identical reports", determinism},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome out;
    try {
      criteria[n].second(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.note << "exception: " << e.what();
    }
    std::printf("[%s] %2zu %s: %s\n", out.ok ? "PASS" : "FAIL", n + 1, criteria[n].first, out.note.str().c_str());
    if (!out.ok) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
