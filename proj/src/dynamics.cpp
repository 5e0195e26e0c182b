#include "xprod/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "xprod/errors.hpp"

namespace xprod {

FiniteAction trivial_action(FiniteGroup g, int points) {
  FiniteAction a;
  a.points = points;
  std::vector<int> id(points);
  std::iota(id.begin(), id.end(), 0);
  a.perms.assign(g.order, id);
  a.group = std::move(g);
  return a;
}

std::optional<ActionWitness> check_action(const FiniteAction& a) {
  const int n = a.group.order;
  if (static_cast<int>(a.perms.size()) != n) return ActionWitness{0, 0, 0};
  for (const auto& p : a.perms) {
    if (static_cast<int>(p.size()) != a.points) return ActionWitness{0, 0, 0};
    std::vector<char> hit(a.points, 0);
    for (int v : p) {
      if (v < 0 || v >= a.points || hit[v]) return ActionWitness{0, 0, 0};
      hit[v] = 1;
    }
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < a.points; ++x)
        if (a.perms[s][a.perms[t][x]] != a.perms[a.group.mul(s, t)][x])
          return ActionWitness{s, t, x};
  return std::nullopt;
}

std::vector<int> fixed_points(const FiniteAction& a, int t) {
  std::vector<int> out;
  for (int x = 0; x < a.points; ++x)
    if (a.perms[t][x] == x) out.push_back(x);
  return out;
}

bool is_free(const FiniteAction& a) {
  for (int t = 1; t < a.group.order; ++t)
    if (!fixed_points(a, t).empty()) return false;
  return true;
}

std::vector<std::vector<int>> orbits(const FiniteAction& a) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(a.points, 0);
  for (int x = 0; x < a.points; ++x) {
    if (seen[x]) continue;
    std::set<int> orb;
    for (int t = 0; t < a.group.order; ++t) orb.insert(a.perms[t][x]);
    std::vector<int> o(orb.begin(), orb.end());
    for (int y : o) seen[y] = 1;
    out.push_back(std::move(o));
  }
  return out;  // first point of each orbit increases, so order is by smallest member
}

bool is_minimal(const FiniteAction& a) { return orbits(a).size() == 1; }

InvariantSetLattice invariant_lattice(const FiniteAction& a) {
  InvariantSetLattice lat;
  lat.orbits = orbits(a);
  const size_t k = lat.orbits.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    std::vector<int> m;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i))
        m.insert(m.end(), lat.orbits[i].begin(), lat.orbits[i].end());
    std::sort(m.begin(), m.end());
    lat.members.push_back(std::move(m));
  }
  std::sort(lat.members.begin(), lat.members.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  return lat;
}

std::vector<std::vector<int>> quasi_orbit_space(const FiniteAction& a) {
  return orbits(a);
}

bool is_invariant_set(const FiniteAction& a, const std::vector<int>& s) {
  std::set<int> in(s.begin(), s.end());
  for (int x : s) {
    if (x < 0 || x >= a.points) return false;
    for (int t = 0; t < a.group.order; ++t)
      if (!in.count(a.perms[t][x])) return false;
  }
  return true;
}

FiniteAction restrict_action(const FiniteAction& a, const std::vector<int>& s) {
  if (!is_invariant_set(a, s))
    throw NotInvariant("restriction set is not a union of orbits");
  std::vector<int> pts(s.begin(), s.end());
  std::sort(pts.begin(), pts.end());
  std::vector<int> newidx(a.points, -1);
  for (size_t i = 0; i < pts.size(); ++i) newidx[pts[i]] = static_cast<int>(i);
  FiniteAction r;
  r.group = a.group;
  r.points = static_cast<int>(pts.size());
  r.perms.assign(a.group.order, std::vector<int>(r.points));
  for (int t = 0; t < a.group.order; ++t)
    for (size_t i = 0; i < pts.size(); ++i)
      r.perms[t][i] = newidx[a.perms[t][pts[i]]];
  return r;
}

bool is_residually_free(const FiniteAction& a) {
  // closed invariant sets are complements of lattice members
  InvariantSetLattice lat = invariant_lattice(a);
  for (const auto& u : lat.members) {
    std::set<int> in(u.begin(), u.end());
    std::vector<int> closed;
    for (int x = 0; x < a.points; ++x)
      if (!in.count(x)) closed.push_back(x);
    if (closed.empty()) continue;
    FiniteAction r = restrict_action(a, closed);
    for (int t = 1; t < r.group.order; ++t)
      if (!fixed_points(r, t).empty()) return false;
  }
  return true;
}

InvariantMean exact_mean(const FiniteGroup& g, int points) {
  InvariantMean f;
  f.values.assign(g.order, std::vector<double>(points, 1.0 / g.order));
  return f;
}

HolderSplit holder_split(const InvariantMean& f, double p) {
  if (!(p > 1.0)) throw BadExponent("holder_split needs p > 1");
  const double q = p / (p - 1.0);
  HolderSplit s;
  s.p = p;
  s.q = q;
  s.g = f.values;
  s.h = f.values;
  for (auto& row : s.g)
    for (double& v : row) v = std::pow(v, 1.0 / p);
  for (auto& row : s.h)
    for (double& v : row) v = std::pow(v, 1.0 / q);
  return s;
}

double verify_mean_identities(const HolderSplit& split, const FiniteAction& a) {
  const int n = a.group.order;
  const int m = a.points;
  double dev = 0.0;
  for (int x = 0; x < m; ++x) {
    double sp = 0.0, sq = 0.0;
    for (int t = 0; t < n; ++t) {
      sp += std::pow(split.g[t][x], split.p);
      sq += std::pow(split.h[t][x], split.q);
    }
    dev = std::max(dev, std::abs(sp - 1.0));
    dev = std::max(dev, std::abs(sq - 1.0));
  }
  // sum_t h(st) alpha_s(g(t)) with alpha_s acting by pullback along phi_{s^{-1}}
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < m; ++x) {
      double acc = 0.0;
      for (int t = 0; t < n; ++t)
        acc += split.h[a.group.mul(s, t)][x] * split.g[t][a.apply_inv(s, x)];
      dev = std::max(dev, std::abs(acc - 1.0));
    }
  return dev;
}

}  // namespace xprod
