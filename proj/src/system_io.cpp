#include "xprod/system_io.hpp"

#include <fstream>
#include <sstream>

#include "xprod/errors.hpp"
#include "xprod/representations.hpp"

namespace xprod {

using nlohmann::json;

namespace {

cplx parse_complex(const json& j) {
  if (j.is_number()) return cplx{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx{j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex entries are numbers or [re, im] pairs");
}

double parse_exponent_token(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "Inf" || s == "infinity") return kInfExponent;
  }
  throw ParseError("exponent entries are numbers or \"inf\"");
}

}  // namespace

FiniteGroup parse_group(const json& j) {
  if (!j.is_object()) throw ParseError("group descriptor must be an object");
  if (j.contains("table")) {
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
      std::vector<int> r;
      for (const auto& v : row) r.push_back(v.get<int>());
      table.push_back(std::move(r));
    }
    return make_group_from_table(std::move(table), j.value("label", std::string{}));
  }
  const std::string preset = j.value("preset", std::string{});
  if (preset == "cyclic") return make_cyclic(j.at("n").get<int>());
  if (preset == "product" || preset == "product_of_cyclics") {
    std::vector<int> ns;
    for (const auto& v : j.at("ns")) ns.push_back(v.get<int>());
    return make_product_of_cyclics(ns);
  }
  if (preset == "symmetric") return make_symmetric(j.at("n").get<int>());
  throw ParseError("unknown group descriptor");
}

FiniteAction parse_action(const json& j, const FiniteGroup& g) {
  if (!j.is_object()) throw ParseError("action descriptor must be an object");
  const int points = j.at("points").get<int>();
  if (points < 1) throw ParseError("points must be positive");
  if (!j.contains("perms")) return trivial_action(g, points);

  auto read_perm = [&](const json& p) {
    std::vector<int> perm;
    for (const auto& v : p) perm.push_back(v.get<int>());
    if (static_cast<int>(perm.size()) != points)
      throw ParseError("permutation length does not match points");
    return perm;
  };

  FiniteAction a;
  a.group = g;
  a.points = points;
  const json& perms = j.at("perms");
  if (perms.is_array()) {
    if (static_cast<int>(perms.size()) != g.order)
      throw ParseError("perms array must list one permutation per group element");
    for (const auto& p : perms) a.perms.push_back(read_perm(p));
  } else if (perms.is_object()) {
    // generator-keyed: complete along the multiplication table
    std::vector<std::vector<int>> known(g.order);
    std::vector<int> id(points);
    for (int x = 0; x < points; ++x) id[x] = x;
    known[0] = id;
    for (const auto& [key, val] : perms.items()) {
      int e = 0;
      try {
        e = std::stoi(key);
      } catch (...) {
        throw ParseError("perm keys are element indices");
      }
      if (e < 0 || e >= g.order) throw ParseError("perm key out of range");
      known[e] = read_perm(val);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (int s = 0; s < g.order; ++s) {
        if (known[s].empty()) continue;
        for (int t = 0; t < g.order; ++t) {
          if (known[t].empty()) continue;
          const int st = g.mul(s, t);
          if (!known[st].empty()) continue;
          std::vector<int> comp(points);
          for (int x = 0; x < points; ++x) comp[x] = known[s][known[t][x]];
          known[st] = std::move(comp);
          grew = true;
        }
      }
    }
    for (int e = 0; e < g.order; ++e)
      if (known[e].empty())
        throw ValidationError("given permutations do not generate the group (element " +
                              std::to_string(e) + " unreachable)");
    a.perms = std::move(known);
  } else {
    throw ParseError("perms must be an array or an object keyed by element index");
  }
  if (auto w = check_action(a)) {
    std::ostringstream os;
    os << "action is not a homomorphism, witness (s,t,x)=(" << w->s << "," << w->t << ","
       << w->x << ")";
    throw ValidationError(os.str());
  }
  return a;
}

Cocycle parse_cocycle(const json& j, int group_order, int points) {
  if (!j.is_object()) throw ParseError("cocycle descriptor must be an object");
  if (j.contains("preset")) {
    const std::string preset = j.at("preset").get<std::string>();
    if (preset == "trivial") return Cocycle::trivial(group_order, points, j.value("m", 1));
    if (preset == "mn_twist") {
      const int n = j.at("n").get<int>();
      if (group_order != n * n || points != 1)
        throw ValidationError("mn_twist(" + std::to_string(n) +
                              ") needs the group Z_n x Z_n acting on one point");
      return mn_twist_cocycle(n);
    }
    throw ParseError("unknown cocycle preset");
  }
  const std::string mode = j.value("mode", std::string{});
  if (mode == "exact") {
    const int m = j.at("m").get<int>();
    const json& ex = j.at("exponents");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(group_order) * group_order * points);
    if (static_cast<int>(ex.size()) != group_order)
      throw ParseError("exponents must be indexed [s][t][x]");
    for (const auto& row : ex) {
      if (static_cast<int>(row.size()) != group_order)
        throw ParseError("exponents must be indexed [s][t][x]");
      for (const auto& cell : row) {
        if (static_cast<int>(cell.size()) != points)
          throw ParseError("exponents must be indexed [s][t][x]");
        for (const auto& v : cell) flat.push_back(v.get<int>());
      }
    }
    return Cocycle::exact(group_order, points, m, std::move(flat));
  }
  if (mode == "complex") {
    const json& vals = j.at("values");
    std::vector<cplx> flat;
    if (static_cast<int>(vals.size()) != group_order)
      throw ParseError("values must be indexed [s][t][x]");
    for (const auto& row : vals) {
      if (static_cast<int>(row.size()) != group_order)
        throw ParseError("values must be indexed [s][t][x]");
      for (const auto& cell : row) {
        if (static_cast<int>(cell.size()) != points)
          throw ParseError("values must be indexed [s][t][x]");
        for (const auto& v : cell) flat.push_back(parse_complex(v));
      }
    }
    return Cocycle::complex_valued(group_order, points, std::move(flat));
  }
  throw ParseError("cocycle needs a preset or a mode of exact|complex");
}

SystemSpec parse_spec(const json& j) {
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  SystemSpec spec;

  SystemPtr sys;
  if (j.value("preset", std::string{}) == "mn_twist") {
    sys = make_mn_twist(j.at("n").get<int>());
  } else {
    if (!j.contains("group")) throw ParseError("spec needs a group");
    FiniteGroup g = parse_group(j.at("group"));
    FiniteAction a = j.contains("action") ? parse_action(j.at("action"), g)
                                          : trivial_action(g, 1);
    Cocycle u = j.contains("cocycle")
                    ? parse_cocycle(j.at("cocycle"), g.order, a.points)
                    : Cocycle::trivial(g.order, a.points);
    sys = make_system(std::move(a), std::move(u), j.value("label", std::string{}));
  }
  spec.sys = sys;

  if (j.contains("elements")) {
    for (const auto& [name, desc] : j.at("elements").items()) {
      const json& coeffs = desc.contains("coeffs") ? desc.at("coeffs") : desc;
      if (static_cast<int>(coeffs.size()) != sys->nG())
        throw ParseError("element coeffs must be indexed [t][x]");
      CrossedElement b = zero_element(sys);
      int t = 0;
      for (const auto& row : coeffs) {
        if (static_cast<int>(row.size()) != sys->nX())
          throw ParseError("element coeffs must be indexed [t][x]");
        int x = 0;
        for (const auto& v : row) b.coeffs(t, x++) = parse_complex(v);
        ++t;
      }
      spec.elements.emplace_back(name, std::move(b));
    }
  }
  if (j.contains("cocycles")) {
    for (const auto& [name, desc] : j.at("cocycles").items())
      spec.extra_cocycles.emplace_back(name,
                                       parse_cocycle(desc, sys->nG(), sys->nX()));
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    if (o.contains("p")) {
      spec.options.p_values.clear();
      for (const auto& v : o.at("p")) spec.options.p_values.push_back(parse_exponent_token(v));
    }
    spec.options.seed = o.value("seed", std::uint64_t{0});
    spec.options.restarts = o.value("restarts", 32);
  }
  return spec;
}

SystemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(j);
}

std::vector<double> parse_exponents(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "inf" || tok == "Inf" || tok == "infinity") {
      out.push_back(kInfExponent);
    } else {
      try {
        out.push_back(std::stod(tok));
      } catch (...) {
        throw ParseError("bad exponent token: " + tok);
      }
    }
  }
  if (out.empty()) throw EmptyP("no exponents given");
  return out;
}

nlohmann::ordered_json element_to_json(const CrossedElement& b) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int t = 0; t < b.coeffs.rows(); ++t) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int x = 0; x < b.coeffs.cols(); ++x)
      row.push_back({b.coeffs(t, x).real(), b.coeffs(t, x).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXcd& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json rep_matrix_to_json(const RepMatrix& rep) {
  nlohmann::ordered_json j;
  switch (rep.kind) {
    case RepKind::Regular: j["kind"] = "regular"; break;
    case RepKind::Trivial: j["kind"] = "trivial"; break;
    case RepKind::Induced: j["kind"] = "induced"; break;
    case RepKind::Custom: j["kind"] = "custom"; break;
  }
  j["dim"] = rep.dim();
  if (rep.kind == RepKind::Induced) j["point"] = rep.induced_point;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  if (rep.kind == RepKind::Regular && rep.sys) {
    const int n = rep.sys->nG();
    for (int row = 0; row < rep.dim(); ++row)
      basis.push_back({row / n, row % n});  // (x, t), x major
  } else if (rep.kind == RepKind::Trivial) {
    for (int x = 0; x < rep.dim(); ++x) basis.push_back(x);
  } else {
    for (int t = 0; t < rep.dim(); ++t) basis.push_back(t);
  }
  j["basis"] = basis;
  j["entries"] = matrix_to_json(rep.mat);
  return j;
}

std::string matrix_to_text(const Eigen::MatrixXcd& m) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const cplx v = m(i, j);
      os << (j ? "  " : "") << v.real();
      os << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace xprod
