#include "xprod/report.hpp"

#include <cmath>
#include <ostream>

#include "xprod/errors.hpp"
#include "xprod/ideals.hpp"
#include "xprod/representations.hpp"

namespace xprod {

using nlohmann::ordered_json;

namespace {

ordered_json header(const SystemSpec& spec, const std::string& command) {
  ordered_json h;
  h["tool"] = "xprod";
  h["version"] = kToolVersion;
  h["command"] = command;
  h["label"] = spec.sys->label;
  h["group"] = spec.sys->group().label;
  h["group_order"] = spec.sys->nG();
  h["points"] = spec.sys->nX();
  h["seed"] = spec.options.seed;
  h["restarts"] = spec.options.restarts;
  h["tolerances"] = {{"algebra_identity", 1e-10},
                     {"membership", 1e-8},
                     {"eigenvalue_separation", 1e-6},
                     {"fourier_roundtrip", 1e-12}};
  if (spec.sys->normalization)
    h["cocycle_normalized_at_load"] = true;
  return h;
}

ordered_json json_exponent(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

ordered_json pnorm_to_json(const PNormResult& r) {
  ordered_json j;
  j["p"] = json_exponent(r.p);
  j["value"] = r.value;
  j["method"] = r.method == PNormResult::Method::Exact ? "exact" : "iterative";
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["restarts_used"] = r.restarts_used;
  return j;
}

ordered_json verdicts_json(const SystemPtr& sys, std::uint64_t seed) {
  ordered_json v;
  SimplicityVerdict sv = verify_simplicity_theorem(sys, seed);
  v["simplicity"] = {{"untwisted", sv.untwisted},
                     {"is_free", sv.is_free},
                     {"is_minimal", sv.is_minimal},
                     {"is_simple", sv.is_simple},
                     {"detects", sv.detects},
                     {"block_dims", sv.block_dims},
                     {"consistent", sv.consistent}};
  TwistedDetectionVerdict tv = verify_twisted_detection_theorem(sys, seed);
  ordered_json per = ordered_json::array();
  for (const auto& sd : tv.per_subgroup)
    per.push_back({{"elements", sd.elements}, {"detects", sd.detects}});
  v["twisted_detection"] = {{"is_free", tv.is_free},
                            {"all_cyclic_restrictions_detect", tv.all_detect},
                            {"per_subgroup", per},
                            {"consistent", tv.consistent}};
  LatticeIsoVerdict lv = verify_lattice_isomorphism(sys, seed);
  v["lattice_isomorphism"] = {{"residually_free", lv.residually_free},
                              {"untwisted", lv.untwisted},
                              {"invariant_sets", lv.invariant_count},
                              {"ideals", lv.ideal_count},
                              {"isomorphism", lv.lattice_isomorphism},
                              {"separates_ideals", lv.separates},
                              {"consistent", lv.consistent}};
  v["consistent"] = sv.consistent && tv.consistent && lv.consistent;
  return v;
}

}  // namespace

ordered_json analyze_dynamics(const SystemSpec& spec) {
  const SystemPtr& sys = spec.sys;
  ordered_json r = header(spec, "dynamics");
  const bool free = is_free(sys->action);
  r["topologically_free"] = free;
  r["freeness_note"] = "topologically free (= free on finite discrete X)";
  r["is_minimal"] = is_minimal(sys->action);
  r["orbits"] = orbits(sys->action);
  InvariantSetLattice lat = invariant_lattice(sys->action);
  r["invariant_lattice"] = lat.members;
  r["quasi_orbits"] = quasi_orbit_space(sys->action);
  const bool rf = is_residually_free(sys->action);
  r["residually_free"] = rf;
  r["residual_freeness_matches_freeness"] = rf == free;
  ordered_json fixed = ordered_json::array();
  for (int t = 0; t < sys->nG(); ++t) fixed.push_back(fixed_points(sys->action, t));
  r["fixed_points"] = fixed;
  HolderSplit split = holder_split(exact_mean(sys->group(), sys->nX()), 2.0);
  const double mean_dev = verify_mean_identities(split, sys->action);
  r["exact_mean_identity_deviation"] = mean_dev;
  r["consistent"] = (rf == free) && mean_dev <= 1e-12;
  return r;
}

ordered_json analyze_norms(const SystemSpec& spec) {
  const SystemPtr& sys = spec.sys;
  ordered_json r = header(spec, "norms");
  OpNormOptions opts;
  opts.seed = spec.options.seed;
  opts.restarts = spec.options.restarts;

  std::vector<std::pair<std::string, CrossedElement>> elements = spec.elements;
  if (elements.empty())
    for (int t = 0; t < sys->nG(); ++t)
      elements.emplace_back("delta_" + std::to_string(t), delta(sys, t));

  ordered_json items = ordered_json::array();
  for (const auto& [name, b] : elements) {
    ordered_json e;
    e["element"] = name;
    Eigen::MatrixXcd lam = regular_matrix(b).mat;
    ordered_json per_p = ordered_json::array();
    for (double p : spec.options.p_values) per_p.push_back(pnorm_to_json(op_norm(lam, p, opts)));
    e["p_norms"] = per_p;
    const double cf1 = closed_form_l1(b);
    const double cfinf = closed_form_linf(b);
    e["closed_form_l1"] = cf1;
    e["closed_form_linf"] = cfinf;
    e["l1_crosscheck_deviation"] = std::abs(op_norm(lam, 1.0).value - cf1);
    e["linf_crosscheck_deviation"] = std::abs(op_norm(lam, kInfExponent).value - cfinf);
    e["ell1_norm"] = ell1_norm(b);
    e["hahn_norm"] = hahn_norm(b);
    NormPResult np = norm_P(b, spec.options.p_values, opts);
    e["norm_P"] = {{"value", np.value}, {"upper", np.upper}};
    ordered_json anti = ordered_json::array();
    for (double p : spec.options.p_values)
      anti.push_back({{"p", json_exponent(p)}, {"deviation", anti_isometry_check(b, p, opts)}});
    e["anti_isometry"] = anti;
    if (spec.options.dump_matrices) {
      RepMatrix rep = regular_matrix(b);
      e["regular_matrix"] = rep_matrix_to_json(rep);
      e["regular_matrix_text"] = matrix_to_text(rep.mat);
    }
    items.push_back(std::move(e));
  }
  r["elements"] = items;
  return r;
}

ordered_json analyze_ideals(const SystemSpec& spec) {
  const SystemPtr& sys = spec.sys;
  ordered_json r = header(spec, "ideals");
  BlockDecomposition d = block_decompose(sys, spec.options.seed);
  r["block_dims"] = d.block_dims;
  r["algebra_dimension"] = sys->nG() * sys->nX();
  std::vector<IdealMask> ideals = ideal_lattice(d);
  r["ideal_count"] = ideals.size();
  r["is_simple"] = is_simple(d);
  r["detects_ideals"] = detects_ideals(d);
  r["hidden_ideal_blocks"] = ideal_blocks(hidden_ideal(d));
  r["separates_ideals"] = separates_ideals(d);
  InvariantSetLattice lat = invariant_lattice(sys->action);
  ordered_json table = ordered_json::array();
  for (const auto& u : lat.members)
    table.push_back({{"U", u}, {"ex_blocks", ideal_blocks(ex(d, u))}});
  r["lattice_map"] = table;
  QuasiOrbitReport q = quasi_orbit_map_check(d);
  ordered_json primes = ordered_json::array();
  for (const auto& e : q.entries)
    primes.push_back({{"prime_blocks", ideal_blocks(e.prime)},
                      {"res", e.res_set},
                      {"orbit_index", e.orbit_index}});
  r["prime_space"] = primes;
  r["quasi_orbit_map"] = {{"bijection", q.bijection},
                          {"expected_bijection", q.expected_bijection},
                          {"consistent", q.consistent}};
  const bool galois_ok = !galois_check(d).has_value();
  r["galois_adjunction_ok"] = galois_ok;
  r["consistent"] = q.consistent && galois_ok;
  return r;
}

ordered_json analyze_cohomology(const SystemSpec& spec) {
  const SystemPtr& sys = spec.sys;
  ordered_json r = header(spec, "cohomology");
  const Cocycle& u = sys->cocycle;
  r["mode"] = u.mode() == CocycleMode::Exact ? "exact" : "complex";
  if (u.mode() == CocycleMode::Exact) r["modulus"] = u.modulus();
  r["normalized"] = u.is_normalized();
  r["identity_ok"] = !check_cocycle_identity(u, sys->action).has_value();
  r["is_trivial_cocycle"] = u.is_trivial();
  r["note"] =
      "equivalence is decided within exact mode (roots of unity of the stated "
      "modulus); circle-valued equivalence beyond that is not decided";

  ordered_json queries = ordered_json::array();
  for (const auto& [name, v] : spec.extra_cocycles) {
    ordered_json q;
    q["cocycle"] = name;
    auto w = check_cocycle_identity(v, sys->action);
    q["identity_ok"] = !w.has_value();
    if (w) {
      q["witness"] = {{"r", w->r}, {"s", w->s}, {"t", w->t}, {"x", w->x}};
      queries.push_back(std::move(q));
      continue;
    }
    try {
      auto xi = cohomologous(u, v, sys->action);
      q["equivalent"] = xi.has_value();
      if (xi) {
        ordered_json exps = ordered_json::array();
        for (int t = 0; t < sys->nG(); ++t) {
          ordered_json row = ordered_json::array();
          for (int x = 0; x < sys->nX(); ++x) row.push_back(xi->exponent(t, x));
          exps.push_back(std::move(row));
        }
        q["xi_exponents"] = exps;
      }
    } catch (const ModeMismatch& e) {
      q["error"] = std::string("ModeMismatch: ") + e.what();
    } catch (const ModulusMismatch& e) {
      q["error"] = std::string("ModulusMismatch: ") + e.what();
    }
    queries.push_back(std::move(q));
  }
  r["queries"] = queries;
  return r;
}

ordered_json analyze_verify(const SystemSpec& spec) {
  ordered_json r = header(spec, "verify");
  ordered_json v = verdicts_json(spec.sys, spec.options.seed);
  r["verdicts"] = v;
  r["consistent"] = v["consistent"];
  return r;
}

ordered_json analyze(const SystemSpec& spec, const std::string& command) {
  if (command == "dynamics") return analyze_dynamics(spec);
  if (command == "norms") return analyze_norms(spec);
  if (command == "ideals") return analyze_ideals(spec);
  if (command == "cohomology") return analyze_cohomology(spec);
  if (command == "verify") return analyze_verify(spec);
  throw ParseError("unknown analyze command: " + command);
}

ordered_json sweep_report(const SweepResult& result) {
  ordered_json r;
  r["tool"] = "xprod";
  r["version"] = kToolVersion;
  r["command"] = "sweep";
  r["groups"] = result.options.groups;
  r["max_points"] = result.options.max_points;
  r["dedup"] = result.options.dedup;
  r["seed"] = result.options.seed;
  r["systems"] = result.items.size();
  r["consistent_count"] = result.consistent_count;
  r["consistent"] = result.all_consistent;
  ordered_json items = ordered_json::array();
  for (const auto& item : result.items) {
    ordered_json e;
    e["label"] = item.sys->label;
    e["is_free"] = item.simplicity.is_free;
    e["is_minimal"] = item.simplicity.is_minimal;
    e["is_simple"] = item.simplicity.is_simple;
    e["block_dims"] = item.simplicity.block_dims;
    e["simplicity_consistent"] = item.simplicity.consistent;
    e["detection_consistent"] = item.detection.consistent;
    e["lattice_consistent"] = item.lattice.consistent;
    e["invariant_sets"] = item.lattice.invariant_count;
    e["ideals"] = item.lattice.ideal_count;
    e["separates_ideals"] = item.lattice.separates;
    e["maximal_abelian"] = item.maximal_abelian;
    e["maximal_abelian_consistent"] = item.maximal_abelian_consistent;
    items.push_back(std::move(e));
  }
  r["items"] = items;
  ordered_json failures = ordered_json::array();
  for (const auto& item : result.items)
    if (!item.consistent) {
      ordered_json f;
      f["label"] = item.sys->label;
      ordered_json perms = ordered_json::array();
      for (const auto& p : item.sys->action.perms) perms.push_back(p);
      f["action_perms"] = perms;
      failures.push_back(std::move(f));
    }
  r["failures"] = failures;
  return r;
}

namespace {
void render_value(const ordered_json& v, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() && val[0].is_object())) {
        os << pad << key << ":\n";
        render_value(val, os, indent + 1);
      } else {
        os << pad << key << ": " << val.dump() << "\n";
      }
    }
  } else if (v.is_array()) {
    int i = 0;
    for (const auto& item : v) {
      os << pad << "- [" << i++ << "]\n";
      render_value(item, os, indent + 1);
    }
  } else {
    os << pad << v.dump() << "\n";
  }
}
}  // namespace

void render_text(const ordered_json& report, std::ostream& os) {
  render_value(report, os, 0);
}

bool report_consistent(const ordered_json& report) {
  if (report.contains("consistent")) return report.at("consistent").get<bool>();
  return true;
}

}  // namespace xprod
