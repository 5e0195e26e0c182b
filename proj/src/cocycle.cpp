#include "xprod/cocycle.hpp"

#include <cmath>
#include <numbers>

#include "xprod/errors.hpp"
#include "xprod/smith.hpp"

namespace xprod {

namespace {

cplx root_of_unity(int k, int m) {
  const double ang = 2.0 * std::numbers::pi * k / m;
  return {std::cos(ang), std::sin(ang)};
}

int posmod(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

}  // namespace

Cocycle Cocycle::trivial(int group_order, int points, int modulus) {
  Cocycle u;
  u.mode_ = CocycleMode::Exact;
  u.n_group_ = group_order;
  u.n_points_ = points;
  u.modulus_ = modulus;
  u.exponents_.assign(static_cast<std::size_t>(group_order) * group_order * points, 0);
  return u;
}

Cocycle Cocycle::exact(int group_order, int points, int modulus,
                       std::vector<int> exponents) {
  if (modulus < 1) throw BadExponent("cocycle modulus must be >= 1");
  const std::size_t need =
      static_cast<std::size_t>(group_order) * group_order * points;
  if (exponents.size() != need) throw DimensionMismatch("cocycle exponent shape");
  Cocycle u;
  u.mode_ = CocycleMode::Exact;
  u.n_group_ = group_order;
  u.n_points_ = points;
  u.modulus_ = modulus;
  for (int& k : exponents) k = posmod(k, modulus);
  u.exponents_ = std::move(exponents);
  return u;
}

Cocycle Cocycle::complex_valued(int group_order, int points, std::vector<cplx> values) {
  const std::size_t need =
      static_cast<std::size_t>(group_order) * group_order * points;
  if (values.size() != need) throw DimensionMismatch("cocycle value shape");
  for (const cplx& v : values)
    if (std::abs(std::abs(v) - 1.0) > 1e-12)
      throw ValidationError("cocycle value is not of modulus one");
  Cocycle u;
  u.mode_ = CocycleMode::Complex;
  u.n_group_ = group_order;
  u.n_points_ = points;
  u.values_ = std::move(values);
  return u;
}

cplx Cocycle::value(int s, int t, int x) const {
  if (mode_ == CocycleMode::Exact)
    return root_of_unity(exponents_[idx(s, t, x)], modulus_);
  return values_[idx(s, t, x)];
}

int Cocycle::exponent(int s, int t, int x) const {
  if (mode_ != CocycleMode::Exact) throw ModeMismatch("exponent needs exact mode");
  return exponents_[idx(s, t, x)];
}

bool Cocycle::is_normalized(double tol) const {
  for (int x = 0; x < n_points_; ++x)
    if (std::abs(value(0, 0, x) - cplx{1.0, 0.0}) > tol) return false;
  return true;
}

bool Cocycle::is_trivial(double tol) const {
  for (int s = 0; s < n_group_; ++s)
    for (int t = 0; t < n_group_; ++t)
      for (int x = 0; x < n_points_; ++x)
        if (std::abs(value(s, t, x) - cplx{1.0, 0.0}) > tol) return false;
  return true;
}

Cocycle mul(const Cocycle& a, const Cocycle& b) {
  if (a.n_group_ != b.n_group_ || a.n_points_ != b.n_points_)
    throw DimensionMismatch("cocycle shapes differ");
  if (a.mode_ == CocycleMode::Exact && b.mode_ == CocycleMode::Exact &&
      a.modulus_ == b.modulus_) {
    std::vector<int> e(a.exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = posmod(static_cast<long long>(a.exponents_[i]) + b.exponents_[i], a.modulus_);
    return Cocycle::exact(a.n_group_, a.n_points_, a.modulus_, std::move(e));
  }
  std::vector<cplx> v(static_cast<std::size_t>(a.n_group_) * a.n_group_ * a.n_points_);
  for (int s = 0; s < a.n_group_; ++s)
    for (int t = 0; t < a.n_group_; ++t)
      for (int x = 0; x < a.n_points_; ++x)
        v[a.idx(s, t, x)] = a.value(s, t, x) * b.value(s, t, x);
  return Cocycle::complex_valued(a.n_group_, a.n_points_, std::move(v));
}

Cocycle Cocycle::restricted_to_elements(const std::vector<int>& elems) const {
  const int k = static_cast<int>(elems.size());
  if (mode_ == CocycleMode::Exact) {
    std::vector<int> e(static_cast<std::size_t>(k) * k * n_points_);
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t)
        for (int x = 0; x < n_points_; ++x)
          e[(static_cast<std::size_t>(s) * k + t) * n_points_ + x] =
              exponents_[idx(elems[s], elems[t], x)];
    return Cocycle::exact(k, n_points_, modulus_, std::move(e));
  }
  std::vector<cplx> v(static_cast<std::size_t>(k) * k * n_points_);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t)
      for (int x = 0; x < n_points_; ++x)
        v[(static_cast<std::size_t>(s) * k + t) * n_points_ + x] =
            values_[idx(elems[s], elems[t], x)];
  return Cocycle::complex_valued(k, n_points_, std::move(v));
}

Cocycle Cocycle::restricted_to_points(const std::vector<int>& pts) const {
  const int k = static_cast<int>(pts.size());
  if (mode_ == CocycleMode::Exact) {
    std::vector<int> e(static_cast<std::size_t>(n_group_) * n_group_ * k);
    for (int s = 0; s < n_group_; ++s)
      for (int t = 0; t < n_group_; ++t)
        for (int x = 0; x < k; ++x)
          e[(static_cast<std::size_t>(s) * n_group_ + t) * k + x] =
              exponents_[idx(s, t, pts[x])];
    return Cocycle::exact(n_group_, k, modulus_, std::move(e));
  }
  std::vector<cplx> v(static_cast<std::size_t>(n_group_) * n_group_ * k);
  for (int s = 0; s < n_group_; ++s)
    for (int t = 0; t < n_group_; ++t)
      for (int x = 0; x < k; ++x)
        v[(static_cast<std::size_t>(s) * n_group_ + t) * k + x] =
            values_[idx(s, t, pts[x])];
  return Cocycle::complex_valued(n_group_, k, std::move(v));
}

OneCochain OneCochain::trivial(int group_order, int points, int modulus) {
  OneCochain c;
  c.mode_ = CocycleMode::Exact;
  c.n_group_ = group_order;
  c.n_points_ = points;
  c.modulus_ = modulus;
  c.exponents_.assign(static_cast<std::size_t>(group_order) * points, 0);
  return c;
}

OneCochain OneCochain::exact(int group_order, int points, int modulus,
                             std::vector<int> exponents) {
  if (modulus < 1) throw BadExponent("cochain modulus must be >= 1");
  if (exponents.size() != static_cast<std::size_t>(group_order) * points)
    throw DimensionMismatch("cochain exponent shape");
  OneCochain c;
  c.mode_ = CocycleMode::Exact;
  c.n_group_ = group_order;
  c.n_points_ = points;
  c.modulus_ = modulus;
  for (int& k : exponents) k = posmod(k, modulus);
  c.exponents_ = std::move(exponents);
  return c;
}

OneCochain OneCochain::complex_valued(int group_order, int points,
                                      std::vector<cplx> values) {
  if (values.size() != static_cast<std::size_t>(group_order) * points)
    throw DimensionMismatch("cochain value shape");
  for (const cplx& v : values)
    if (std::abs(std::abs(v) - 1.0) > 1e-12)
      throw ValidationError("cochain value is not of modulus one");
  OneCochain c;
  c.mode_ = CocycleMode::Complex;
  c.n_group_ = group_order;
  c.n_points_ = points;
  c.values_ = std::move(values);
  return c;
}

cplx OneCochain::value(int t, int x) const {
  if (mode_ == CocycleMode::Exact)
    return root_of_unity(exponents_[idx(t, x)], modulus_);
  return values_[idx(t, x)];
}

int OneCochain::exponent(int t, int x) const {
  if (mode_ != CocycleMode::Exact) throw ModeMismatch("exponent needs exact mode");
  return exponents_[idx(t, x)];
}

OneCochain OneCochain::inverted() const {
  OneCochain c = *this;
  if (mode_ == CocycleMode::Exact) {
    for (int& k : c.exponents_) k = posmod(-static_cast<long long>(k), modulus_);
  } else {
    for (cplx& v : c.values_) v = std::conj(v);
  }
  return c;
}

std::optional<CocycleWitness> check_cocycle_identity(const Cocycle& u,
                                                     const FiniteAction& act) {
  const int n = act.group.order;
  const int m = act.points;
  if (u.group_order() != n || u.points() != m)
    throw DimensionMismatch("cocycle shape does not match the system");
  const bool exact = u.mode() == CocycleMode::Exact;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const int st = act.group.mul(s, t);
        const int rs = act.group.mul(r, s);
        for (int x = 0; x < m; ++x) {
          const int xr = act.apply_inv(r, x);  // alpha_r pullback
          if (exact) {
            long long lhs = u.exponent(s, t, xr) + u.exponent(r, st, x);
            long long rhs = u.exponent(r, s, x) + u.exponent(rs, t, x);
            if ((lhs - rhs) % u.modulus() != 0)
              return CocycleWitness{r, s, t, x, u.value(s, t, xr) * u.value(r, st, x),
                                    u.value(r, s, x) * u.value(rs, t, x)};
          } else {
            cplx lhs = u.value(s, t, xr) * u.value(r, st, x);
            cplx rhs = u.value(r, s, x) * u.value(rs, t, x);
            if (std::abs(lhs - rhs) > 1e-10)
              return CocycleWitness{r, s, t, x, lhs, rhs};
          }
        }
      }
  return std::nullopt;
}

Cocycle coboundary(const OneCochain& xi, const FiniteAction& act) {
  const int n = act.group.order;
  const int m = act.points;
  if (xi.group_order() != n || xi.points() != m)
    throw DimensionMismatch("cochain shape does not match the system");
  if (xi.mode() == CocycleMode::Exact) {
    std::vector<int> e(static_cast<std::size_t>(n) * n * m);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const int st = act.group.mul(s, t);
        for (int x = 0; x < m; ++x)
          e[(static_cast<std::size_t>(s) * n + t) * m + x] =
              posmod(static_cast<long long>(xi.exponent(t, act.apply_inv(s, x))) -
                         xi.exponent(st, x) + xi.exponent(s, x),
                     xi.modulus());
      }
    return Cocycle::exact(n, m, xi.modulus(), std::move(e));
  }
  std::vector<cplx> v(static_cast<std::size_t>(n) * n * m);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int st = act.group.mul(s, t);
      for (int x = 0; x < m; ++x)
        v[(static_cast<std::size_t>(s) * n + t) * m + x] =
            xi.value(t, act.apply_inv(s, x)) * std::conj(xi.value(st, x)) *
            xi.value(s, x);
    }
  return Cocycle::complex_valued(n, m, std::move(v));
}

std::pair<Cocycle, OneCochain> normalize(const Cocycle& u, const FiniteAction& act) {
  const int n = u.group_order();
  const int m = u.points();
  if (u.mode() == CocycleMode::Exact) {
    std::vector<int> e(static_cast<std::size_t>(n) * m, 0);
    for (int x = 0; x < m; ++x) e[x] = -u.exponent(0, 0, x);  // xi(1) = conj(u(1,1))
    OneCochain xi = OneCochain::exact(n, m, u.modulus(), std::move(e));
    return {mul(u, coboundary(xi, act)), xi};
  }
  std::vector<cplx> v(static_cast<std::size_t>(n) * m, cplx{1.0, 0.0});
  for (int x = 0; x < m; ++x) v[x] = std::conj(u.value(0, 0, x));
  OneCochain xi = OneCochain::complex_valued(n, m, std::move(v));
  return {mul(u, coboundary(xi, act)), xi};
}

std::optional<OneCocycleWitness> z1_check(const OneCochain& omega,
                                          const FiniteAction& act) {
  const int n = act.group.order;
  const int m = act.points;
  if (omega.group_order() != n || omega.points() != m)
    throw DimensionMismatch("cochain shape does not match the system");
  const bool exact = omega.mode() == CocycleMode::Exact;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int st = act.group.mul(s, t);
      for (int x = 0; x < m; ++x) {
        if (exact) {
          long long lhs = omega.exponent(st, x);
          long long rhs = omega.exponent(s, x) + omega.exponent(t, act.apply_inv(s, x));
          if ((lhs - rhs) % omega.modulus() != 0) return OneCocycleWitness{s, t, x};
        } else {
          cplx lhs = omega.value(st, x);
          cplx rhs = omega.value(s, x) * omega.value(t, act.apply_inv(s, x));
          if (std::abs(lhs - rhs) > 1e-10) return OneCocycleWitness{s, t, x};
        }
      }
    }
  return std::nullopt;
}

std::optional<OneCochain> cohomologous(const Cocycle& u, const Cocycle& v,
                                       const FiniteAction& act) {
  if (u.mode() != CocycleMode::Exact || v.mode() != CocycleMode::Exact)
    throw ModeMismatch("cohomologous is decided in exact mode only");
  if (u.modulus() != v.modulus())
    throw ModulusMismatch("cohomologous needs a common modulus");
  if (u.group_order() != v.group_order() || u.points() != v.points())
    throw DimensionMismatch("cocycle shapes differ");
  const int n = act.group.order;
  const int m = act.points;
  const std::int64_t mod = u.modulus();

  // unknowns e(t,x); rows are the exponent form of u = v * d2(xi):
  //   e(t, phi_{s^{-1}} x) - e(st, x) + e(s, x) = k_u(s,t,x) - k_v(s,t,x)  (mod m)
  const std::size_t unknowns = static_cast<std::size_t>(n) * m;
  IntMatrix rows;
  std::vector<std::int64_t> rhs;
  rows.reserve(static_cast<std::size_t>(n) * n * m);
  auto var = [m](int t, int x) { return static_cast<std::size_t>(t) * m + x; };
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int st = act.group.mul(s, t);
      for (int x = 0; x < m; ++x) {
        std::vector<std::int64_t> row(unknowns, 0);
        row[var(t, act.apply_inv(s, x))] += 1;
        row[var(st, x)] -= 1;
        row[var(s, x)] += 1;
        rows.push_back(std::move(row));
        rhs.push_back(u.exponent(s, t, x) - v.exponent(s, t, x));
      }
    }
  auto sol = solve_mod(rows, rhs, mod);
  if (!sol) return std::nullopt;
  std::vector<int> e(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) e[i] = static_cast<int>((*sol)[i]);
  return OneCochain::exact(n, m, static_cast<int>(mod), std::move(e));
}

Cocycle mn_twist_cocycle(int n) {
  if (n < 1) throw BadExponent("mn_twist needs n >= 1");
  const int order = n * n;
  std::vector<int> e(static_cast<std::size_t>(order) * order, 0);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      const int r = g % n;   // second component of the first element
      const int s = h / n;   // first component of the second element
      e[static_cast<std::size_t>(g) * order + h] = posmod(-static_cast<long long>(r) * s, n);
    }
  return Cocycle::exact(order, 1, n, std::move(e));
}

}  // namespace xprod
