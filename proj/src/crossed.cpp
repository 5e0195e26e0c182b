#include "xprod/crossed.hpp"

#include <algorithm>
#include <sstream>

#include "xprod/errors.hpp"

namespace xprod {

SystemPtr make_system(FiniteAction action, Cocycle u, std::string label) {
  if (auto w = check_action(action)) {
    std::ostringstream os;
    os << "action is not a homomorphism, witness (s,t,x)=(" << w->s << "," << w->t
       << "," << w->x << ")";
    throw ValidationError(os.str());
  }
  if (u.group_order() != action.group.order || u.points() != action.points)
    throw ValidationError("cocycle shape does not match group/action");
  auto sys = std::make_shared<System>();
  if (!u.is_normalized()) {
    auto [nu, xi] = normalize(u, action);
    sys->cocycle = std::move(nu);
    sys->normalization = std::move(xi);
  } else {
    sys->cocycle = std::move(u);
  }
  if (auto w = check_cocycle_identity(sys->cocycle, action)) {
    std::ostringstream os;
    os << "cocycle identity fails, witness (r,s,t,x)=(" << w->r << "," << w->s << ","
       << w->t << "," << w->x << ")";
    throw ValidationError(os.str());
  }
  sys->action = std::move(action);
  sys->label = std::move(label);
  return sys;
}

SystemPtr make_mn_twist(int n) {
  FiniteGroup g = make_product_of_cyclics({n, n});
  FiniteAction a = trivial_action(std::move(g), 1);
  return make_system(std::move(a), mn_twist_cocycle(n), "mn_twist(" + std::to_string(n) + ")");
}

CrossedElement zero_element(SystemPtr sys) {
  CrossedElement b;
  b.coeffs = Eigen::MatrixXcd::Zero(sys->nG(), sys->nX());
  b.sys = std::move(sys);
  return b;
}

CrossedElement delta(SystemPtr sys, int t) {
  CrossedElement b = zero_element(std::move(sys));
  b.coeffs.row(t).setOnes();
  return b;
}

CrossedElement embed(SystemPtr sys, const Eigen::VectorXcd& a) {
  if (a.size() != sys->nX()) throw DimensionMismatch("embed expects a function on X");
  CrossedElement b = zero_element(std::move(sys));
  b.coeffs.row(0) = a.transpose();
  return b;
}

CrossedElement random_element(SystemPtr sys, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  CrossedElement b = zero_element(std::move(sys));
  for (int t = 0; t < b.coeffs.rows(); ++t)
    for (int x = 0; x < b.coeffs.cols(); ++x) b.coeffs(t, x) = cplx{dist(rng), dist(rng)};
  return b;
}

namespace {
void require_same_system(const CrossedElement& a, const CrossedElement& b) {
  if (a.sys != b.sys) throw SystemMismatch("elements live in different systems");
}
}  // namespace

CrossedElement convolve(const CrossedElement& a, const CrossedElement& b) {
  require_same_system(a, b);
  const System& sys = *a.sys;
  const int n = sys.nG(), m = sys.nX();
  CrossedElement out = zero_element(a.sys);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int r = sys.group().mul(s, t);
      for (int x = 0; x < m; ++x)
        out.coeffs(r, x) +=
            a.coeffs(s, x) * b.coeffs(t, sys.act_inv(s, x)) * sys.u(s, t, x);
    }
  return out;
}

CrossedElement involute(const CrossedElement& b) {
  const System& sys = *b.sys;
  const int n = sys.nG(), m = sys.nX();
  CrossedElement out = zero_element(b.sys);
  for (int t = 0; t < n; ++t) {
    const int ti = sys.group().inv(t);
    for (int x = 0; x < m; ++x)
      out.coeffs(t, x) = std::conj(b.coeffs(ti, sys.act_inv(t, x))) *
                         std::conj(sys.u(t, ti, x));
  }
  return out;
}

CrossedElement operator+(const CrossedElement& a, const CrossedElement& b) {
  require_same_system(a, b);
  CrossedElement out = a;
  out.coeffs += b.coeffs;
  return out;
}

CrossedElement operator-(const CrossedElement& a, const CrossedElement& b) {
  require_same_system(a, b);
  CrossedElement out = a;
  out.coeffs -= b.coeffs;
  return out;
}

CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) {
  return convolve(a, b);
}

CrossedElement operator*(cplx z, const CrossedElement& b) {
  CrossedElement out = b;
  out.coeffs *= z;
  return out;
}

double ell1_norm(const CrossedElement& b) {
  double acc = 0.0;
  for (int t = 0; t < b.coeffs.rows(); ++t)
    acc += b.coeffs.row(t).cwiseAbs().maxCoeff();
  return acc;
}

Eigen::VectorXcd fourier_coefficient(const CrossedElement& b, int t) {
  return b.coeffs.row(t).transpose();
}

std::optional<AssocWitness> associativity_probe(const SystemPtr& sys, int trials,
                                                std::uint64_t seed) {
  if (trials < 1) throw BadExponent("associativity_probe needs trials >= 1");
  const int n = sys->nG(), m = sys->nX();
  const double tol = 1e-10;
  for (int r = 0; r < n; ++r) {
    CrossedElement dr = delta(sys, r);
    for (int s = 0; s < n; ++s) {
      CrossedElement ds = delta(sys, s);
      CrossedElement rs = convolve(dr, ds);
      for (int t = 0; t < n; ++t) {
        CrossedElement dt = delta(sys, t);
        CrossedElement lhs = convolve(rs, dt);
        CrossedElement rhs = convolve(dr, convolve(ds, dt));
        for (int x = 0; x < m; ++x) {
          const int row = sys->group().mul(sys->group().mul(r, s), t);
          const double dev = std::abs(lhs.coeffs(row, x) - rhs.coeffs(row, x));
          if (dev > tol) return AssocWitness{r, s, t, x, dev};
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    CrossedElement a = random_element(sys, rng);
    CrossedElement b = random_element(sys, rng);
    CrossedElement c = random_element(sys, rng);
    double dev = ((convolve(convolve(a, b), c) - convolve(a, convolve(b, c))).coeffs)
                     .cwiseAbs()
                     .maxCoeff();
    double scale = std::max(1.0, ell1_norm(a) * ell1_norm(b) * ell1_norm(c));
    if (dev > tol * scale) return AssocWitness{-1, -1, -1, -1, dev};
  }
  return std::nullopt;
}

SystemPtr restrict_to_subgroup(const SystemPtr& sys, const Subgroup& h) {
  if (!is_subgroup(sys->group(), h.elements))
    throw NotSubgroup("element set is not a subgroup");
  const int k = h.order();
  std::vector<int> newidx(sys->nG(), -1);
  for (int i = 0; i < k; ++i) newidx[h.elements[i]] = i;
  FiniteGroup sub;
  sub.order = k;
  sub.table.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      sub.table[i][j] = newidx[sys->group().mul(h.elements[i], h.elements[j])];
  sub.inverses.assign(k, 0);
  for (int i = 0; i < k; ++i) sub.inverses[i] = newidx[sys->group().inv(h.elements[i])];
  sub.label = sys->group().label + "|H" + std::to_string(k);
  FiniteAction act;
  act.group = std::move(sub);
  act.points = sys->nX();
  act.perms.reserve(k);
  for (int i = 0; i < k; ++i) act.perms.push_back(sys->action.perms[h.elements[i]]);
  Cocycle ru = sys->cocycle.restricted_to_elements(h.elements);
  return make_system(std::move(act), std::move(ru), sys->label + "|H");
}

CrossedElement restrict_to_subgroup(const CrossedElement& b, const Subgroup& h) {
  SystemPtr sub = restrict_to_subgroup(b.sys, h);
  CrossedElement out = zero_element(sub);
  for (int i = 0; i < h.order(); ++i) out.coeffs.row(i) = b.coeffs.row(h.elements[i]);
  return out;
}

SystemPtr restrict_to_invariant(const SystemPtr& sys, const std::vector<int>& pts) {
  if (!is_invariant_set(sys->action, pts))
    throw NotInvariant("point set is not a union of orbits");
  std::vector<int> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  FiniteAction act = restrict_action(sys->action, sorted);
  Cocycle ru = sys->cocycle.restricted_to_points(sorted);
  return make_system(std::move(act), std::move(ru), sys->label + "|U");
}

CrossedElement restrict_to_invariant(const CrossedElement& b, const std::vector<int>& pts) {
  SystemPtr sub = restrict_to_invariant(b.sys, pts);
  std::vector<int> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  CrossedElement out = zero_element(sub);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    out.coeffs.col(static_cast<int>(i)) = b.coeffs.col(sorted[i]);
  return out;
}

std::vector<Fiber> trivial_action_fibers(const CrossedElement& b) {
  const System& sys = *b.sys;
  for (int t = 0; t < sys.nG(); ++t)
    for (int x = 0; x < sys.nX(); ++x)
      if (sys.act(t, x) != x) throw ActionNotTrivial("fibers need a trivial action");
  std::vector<Fiber> out;
  for (int x = 0; x < sys.nX(); ++x) {
    Fiber f;
    f.x = x;
    FiniteAction act = trivial_action(sys.group(), 1);
    f.point_system = make_system(std::move(act), sys.cocycle.restricted_to_points({x}),
                                 sys.label + "@x" + std::to_string(x));
    f.element = zero_element(f.point_system);
    f.element.coeffs.col(0) = b.coeffs.col(x);
    out.push_back(std::move(f));
  }
  return out;
}

CrossedElement apply_cocycle_iso(const OneCochain& xi, const CrossedElement& b,
                                 SystemPtr target) {
  if (xi.group_order() != b.sys->nG() || xi.points() != b.sys->nX())
    throw DimensionMismatch("cochain shape does not match the element");
  if (target->nG() != b.sys->nG() || target->nX() != b.sys->nX())
    throw DimensionMismatch("target system shape mismatch");
  CrossedElement out = zero_element(std::move(target));
  for (int t = 0; t < b.sys->nG(); ++t)
    for (int x = 0; x < b.sys->nX(); ++x)
      out.coeffs(t, x) = b.coeffs(t, x) * xi.value(t, x);
  return out;
}

}  // namespace xprod
