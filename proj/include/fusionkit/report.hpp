#pragma once

// Machine-readable reports for the command-line tool. Every section holding
// floating-point results carries the tolerance it was computed with.

#include <optional>
#include <string>

#include "fusionkit/grading.hpp"
#include "fusionkit/io.hpp"
#include "fusionkit/modular.hpp"
#include "fusionkit/module.hpp"
#include "fusionkit/perron.hpp"
#include "fusionkit/ring.hpp"
#include "fusionkit/series.hpp"

namespace fusionkit {

struct AnalysisOptions {
  double tolerance = kDefaultTolerance;
  double modular_tolerance = kModularTolerance;
  long max_iterations = kDefaultMaxIterations;
};

/// Process exit statuses shared by the reports and the CLI.
enum class Status : int { ok = 0, axiom_failure = 1, usage = 2, theorem_violation = 3 };

struct Report {
  Json body = Json::object();
  Status status = Status::ok;

  void fail(Status s) {
    if (static_cast<int>(s) > static_cast<int>(status)) status = s;
  }
};

namespace detail {


inline Json violations_json(const ValidationReport& rep) {
  Json out = Json::array();
  for (const auto& v : rep.violations) {
    Json item = {{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}};
    if (v.magnitude != 0.0) item["magnitude"] = v.magnitude;
    out.push_back(std::move(item));
  }
  return out;
}

inline Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json series_json(const SeriesReport& s) {
  Json chain = Json::array();
  for (const auto& t : s.chain) chain.push_back(t.indices());
  return {{"chain", chain}, {"stabilized_at", s.stabilized_at}, {"nilpotency_class", optional_int(s.nilpotency_class)}};
}

inline void check(Json& checks, Report& rep, const std::string& name, bool passed) {
  checks[name] = passed;
  if (!passed) rep.fail(Status::theorem_violation);
}

}  // namespace detail

inline Json ring_validation_json(const ValidationReport& v) {
  return {{"passed", v.passed()}, {"violations", detail::violations_json(v)}};
}

inline Report validation_report(const FusionRing& ring) {
  Report rep;
  auto v = validate_ring(ring);
  rep.body = {{"kind", "ring"}, {"rank", ring.rank()}, {"validation", ring_validation_json(v)}};
  if (!v.passed()) rep.fail(Status::axiom_failure);
  return rep;
}

inline Report validation_report(const ModularData& md) {
  Report rep;
  auto v = validate_modular(md);
  rep.body = {{"kind", "modular"},
              {"rank", md.rank()},
              {"validation",
               {{"passed", v.passed()}, {"violations", detail::violations_json(v)}, {"tolerance", md.tolerance()}}}};
  if (!v.passed()) rep.fail(Status::axiom_failure);
  return rep;
}

/// Upper and lower central series with the duality check. Noncommutative
/// rings get the upper series only.
inline Json series_section(const FusionRing& ring, Report& rep) {
  Json out;
  auto upper = upper_central_series(ring);
  out["upper"] = detail::series_json(upper);
  out["nilpotency_class"] = detail::optional_int(upper.nilpotency_class);
  if (is_commutative(ring)) {
    auto d = verify_series_duality(ring);
    out["lower"] = detail::series_json(d.lower);
    Json inc = Json::array();
    for (const auto& x : d.inclusions) inc.push_back({{"k", x.k}, {"holds", x.holds}});
    out["duality"] = {{"equivalence_holds", d.equivalence_holds},
                      {"first_mismatch", detail::optional_int(d.first_mismatch)},
                      {"inclusions", inc},
                      {"passed", d.passed()}};
    if (!d.passed()) rep.fail(Status::theorem_violation);
  } else {
    out["lower"] = nullptr;
    out["duality"] = nullptr;
    out["lower_unavailable"] = "ring is not commutative";
  }
  return out;
}

inline Json modular_section(const ModularData& md, const FusionRing& stored, Report& rep) {
  Json out;
  const double tol = md.tolerance();
  auto v = validate_modular(md);
  out["validation"] = {{"passed", v.passed()}, {"violations", detail::violations_json(v)}, {"tolerance", tol}};
  if (!v.passed()) {
    rep.fail(Status::axiom_failure);
    return out;
  }
  auto ver = verlinde_fusion(md);
  const auto& ring = ver.ring;
  Json checks;
  out["verlinde"] = {{"residual", ver.residual}, {"matches_ring", ring == stored}, {"tolerance", tol}};
  detail::check(checks, rep, "verlinde_matches_ring", ring == stored);

  auto h = ring_characters(md);
  const double hres = character_homomorphism_residual(ring, h);
  out["characters"] = {{"homomorphism_residual", hres}, {"tolerance", md.scaled_tolerance()}};
  detail::check(checks, rep, "characters_are_homomorphisms", hres <= md.scaled_tolerance());

  auto bal = balancing_check(md, ring);
  out["balancing"] = {{"worst", bal.worst}, {"passed", bal.passed}, {"tolerance", md.scaled_tolerance()}};
  detail::check(checks, rep, "balancing", bal.passed);

  auto inv = invertibles_from_smatrix(md, ring);
  out["invertibles"] = {{"indices", inv.indices}, {"invariant_factors", invariant_factors(inv.group)}};

  auto sch = schneider_iso_check(md, ring);
  out["universal_vs_invertibles"] = {{"universal_factors", sch.u_factors},
                                     {"invertible_factors", sch.g_factors},
                                     {"block_spread", sch.block_spread},
                                     {"character_residual", sch.character_residual},
                                     {"injective", sch.injective},
                                     {"passed", sch.passed()},
                                     {"tolerance", tol}};
  detail::check(checks, rep, "universal_grading_dual_to_invertibles", sch.passed());

  auto cs = central_series_centralizer_check(md, ring);
  Json cents = Json::array();
  for (const auto& c : cs.centralizers) cents.push_back(c.indices());
  out["central_series_centralizers"] = {{"upper_centralizers", cents},
                                        {"lower", detail::series_json(cs.lower)["chain"]},
                                        {"series_match", cs.series_match},
                                        {"adjoint", cs.adjoint.indices()},
                                        {"pointed_centralizer", cs.pointed_centralizer.indices()},
                                        {"adjoint_is_pointed_centralizer", cs.adjoint_is_pointed_centralizer},
                                        {"symmetric_terms", cs.symmetric_terms},
                                        {"passed", cs.passed()}};
  detail::check(checks, rep, "upper_centralizer_is_lower", cs.series_match);
  detail::check(checks, rep, "adjoint_is_pointed_centralizer", cs.adjoint_is_pointed_centralizer);
  detail::check(checks, rep, "upper_tail_symmetric", cs.symmetric_tail);

  Json subs = Json::array();
  bool all_dc = true, all_id = true;
  for (const auto& k : enumerate_subcats(ring)) {
    auto dc = double_centralizer_check(md, ring, k);
    auto id = centralizer_identity_check(md, ring, k);
    all_dc = all_dc && dc.passed();
    all_id = all_id && id.holds;
    subs.push_back({{"indices", k.indices()},
                    {"centralizer", dc.k1.indices()},
                    {"double_centralizer_equal", dc.double_equal},
                    {"dim", dc.dim_k},
                    {"centralizer_dim", dc.dim_k1},
                    {"dims_multiply_to_global", dc.dims_ok},
                    {"symmetric", dc.symmetric},
                    {"modular", dc.modular},
                    {"adjoint_centralizer_is_commutator", id.holds}});
  }
  out["subcategories"] = {{"entries", subs}, {"global_dim", md.global_dim()}, {"tolerance", kRatioTolerance}};
  detail::check(checks, rep, "double_centralizer", all_dc);
  detail::check(checks, rep, "adjoint_centralizer_is_commutator", all_id);

  const double excess = dimension_bound_excess(md);
  out["dimension_bound_excess"] = {{"value", excess}, {"tolerance", md.scaled_tolerance()}};
  detail::check(checks, rep, "dimension_bound", excess <= md.scaled_tolerance());
  auto mismatch = invertible_centralizer_mismatch(md, ring);
  detail::check(checks, rep, "absolute_value_criterion", !mismatch.has_value());

  out["checks"] = checks;
  return out;
}

/// Everything computable for a ring; `md` adds the modular checks.
inline Report analysis_report(const FusionRing& ring, const AnalysisOptions& opt,
                              const ModularData* md = nullptr) {
  Report rep;
  auto& b = rep.body;
  b["kind"] = "analysis";
  b["rank"] = ring.rank();
  b["labels"] = ring.labels();
  auto v = validate_ring(ring);
  b["validation"] = ring_validation_json(v);
  if (!v.passed()) {
    rep.fail(Status::axiom_failure);
    return rep;
  }
  try {
    Json checks;
    auto fp = fp_dimensions(ring, opt.tolerance, opt.max_iterations);
    b["fp"] = {{"dims", fp.dims},
               {"ring_dim", fp.ring_dim},
               {"integer_flags", fp.integer_flags},
               {"sq_integer_flags", fp.sq_integer_flags},
               {"ring_dim_integer", fp.ring_dim_integer},
               {"homomorphism_residual", fp.homomorphism_residual},
               {"iterations", fp.iterations},
               {"tolerance", fp.tolerance}};
    b["adjoint"] = adjoint_subring(ring).indices();
    b["pointed"] = pointed_subring(ring).indices();
    b["commutative"] = is_commutative(ring);

    auto u = universal_grading(ring);
    auto masses = block_masses(u, fp);
    const double want = fp.ring_dim / u.num_blocks();
    double spread = 0.0;
    for (double m : masses) spread = std::max(spread, std::abs(m - want));
    Json ug = {{"blocks", u.components},
               {"order", u.group.order()},
               {"abelian", u.group.is_abelian()},
               {"block_masses", masses},
               {"block_mass_deviation", spread},
               {"tolerance", 10 * fp.tolerance * std::max(1.0, fp.ring_dim)}};
    ug["invariant_factors"] = u.group.is_abelian() ? Json(invariant_factors(u.group)) : Json(nullptr);
    b["universal_grading"] = ug;
    detail::check(checks, rep, "equal_block_masses", spread <= 10 * fp.tolerance * std::max(1.0, fp.ring_dim));

    auto series = series_section(ring, rep);
    b["nilpotency_class"] = series["nilpotency_class"];
    b["series"] = series;
    if (series["duality"].is_object()) checks["series_duality"] = series["duality"]["passed"];

    if (fp.ring_dim_integer &&
        std::all_of(fp.sq_integer_flags.begin(), fp.sq_integer_flags.end(), [](bool x) { return x; })) {
      auto e = dimension_parity_grading(ring, fp);
      Json comps;
      for (const auto& [n, members] : e.components) comps[std::to_string(n)] = members;
      b["parity_grading"] = {{"order", e.order()}, {"components", comps}};
    } else {
      b["parity_grading"] = {{"order", nullptr}, {"unavailable", "FPdim(R) or some FPdim(X)^2 is not an integer"}};
    }

    auto m = regular_module(ring);
    auto mfp = module_fp_data(ring, m, fp, opt.tolerance, opt.max_iterations);
    auto us = uset_action(ring, m, opt.tolerance, opt.max_iterations);
    b["regular_module"] = {{"adjoint_components", us.components},
                           {"component_masses", us.component_masses},
                           {"transitive", us.transitive},
                           {"tolerance", kRatioTolerance}};
    auto div = divisibility_report(ring, m, fp, mfp);
    Json mr = Json::array(), rr = Json::array();
    for (const auto& r : div.module_ratios)
      mr.push_back({{"basic", r.basic},
                    {"component", r.component},
                    {"module_ratio", r.module_ratio},
                    {"component_ratio", r.component_ratio},
                    {"integral", r.module_integer && r.component_integer}});
    for (const auto& r : div.ring_ratios) rr.push_back({{"basic", r.basic}, {"ratio", r.ratio}, {"integral", r.integer}});
    b["divisibility"] = {{"advisory", div.advisory},
                         {"module_dim", div.module_dim},
                         {"adjoint_dim", div.adjoint_dim},
                         {"module_ratios", mr},
                         {"ring_ratios", rr},
                         {"all_integral", div.all_integer()},
                         {"tolerance", kRatioTolerance}};
    if (!div.advisory) detail::check(checks, rep, "divisibility", div.all_integer());

    if (md) b["modular"] = modular_section(*md, ring, rep);
    b["checks"] = checks;
  } catch (const InvariantViolation& e) {
    b["error"] = std::string("theorem violation: ") + e.what();
    rep.fail(Status::theorem_violation);
  } catch (const ConvergenceError& e) {
    b["error"] = std::string("no convergence: ") + e.what();
    rep.fail(Status::theorem_violation);
  }
  return rep;
}

inline Report series_report(const FusionRing& ring) {
  Report rep;
  auto v = validate_ring(ring);
  rep.body["kind"] = "series";
  rep.body["validation"] = ring_validation_json(v);
  if (!v.passed()) {
    rep.fail(Status::axiom_failure);
    return rep;
  }
  try {
    rep.body["series"] = series_section(ring, rep);
  } catch (const InvariantViolation& e) {
    rep.body["error"] = std::string("theorem violation: ") + e.what();
    rep.fail(Status::theorem_violation);
  }
  return rep;
}

inline Report modular_report(const ModularData& md) {
  Report rep;
  rep.body["kind"] = "modular";
  rep.body["rank"] = md.rank();
  try {
    FusionRing ring;
    try {
      ring = verlinde_fusion(md).ring;
    } catch (const NotModularError&) {
      // the validation section below carries the witness
    }
    rep.body["modular"] = modular_section(md, ring, rep);
  } catch (const InvariantViolation& e) {
    rep.body["error"] = std::string("theorem violation: ") + e.what();
    rep.fail(Status::theorem_violation);
  }
  return rep;
}

}  // namespace fusionkit
