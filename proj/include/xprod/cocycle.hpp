#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "xprod/dynamics.hpp"

namespace xprod {

using cplx = std::complex<double>;

enum class CocycleMode { Exact, Complex };

/// Unit-modulus 2-cochain u(s,t)(x) on a system with |G| elements and |X|
/// points. Exact mode stores exponents k with u = exp(2*pi*i*k/m); complex
/// mode stores the values directly.
class Cocycle {
 public:
  static Cocycle trivial(int group_order, int points, int modulus = 1);
  static Cocycle exact(int group_order, int points, int modulus,
                       std::vector<int> exponents);  // flat [s][t][x]
  static Cocycle complex_valued(int group_order, int points,
                                std::vector<cplx> values);  // flat [s][t][x]

  CocycleMode mode() const { return mode_; }
  int modulus() const { return modulus_; }
  int group_order() const { return n_group_; }
  int points() const { return n_points_; }

  cplx value(int s, int t, int x) const;
  int exponent(int s, int t, int x) const;  // Exact mode only

  bool is_normalized(double tol = 1e-12) const;  // u(1,1) = 1
  bool is_trivial(double tol = 1e-12) const;     // u = 1 everywhere

  /// Pointwise product; both exact with equal modulus stays exact, anything
  /// else falls back to complex values.
  friend Cocycle mul(const Cocycle& a, const Cocycle& b);

  Cocycle restricted_to_elements(const std::vector<int>& elems) const;
  Cocycle restricted_to_points(const std::vector<int>& pts) const;

 private:
  std::size_t idx(int s, int t, int x) const {
    return (static_cast<std::size_t>(s) * n_group_ + t) * n_points_ + x;
  }
  CocycleMode mode_ = CocycleMode::Exact;
  int n_group_ = 1, n_points_ = 1, modulus_ = 1;
  std::vector<int> exponents_;
  std::vector<cplx> values_;
};

/// Unit-modulus 1-cochain xi(t)(x), dual mode like Cocycle.
class OneCochain {
 public:
  static OneCochain trivial(int group_order, int points, int modulus = 1);
  static OneCochain exact(int group_order, int points, int modulus,
                          std::vector<int> exponents);  // flat [t][x]
  static OneCochain complex_valued(int group_order, int points,
                                   std::vector<cplx> values);

  CocycleMode mode() const { return mode_; }
  int modulus() const { return modulus_; }
  int group_order() const { return n_group_; }
  int points() const { return n_points_; }

  cplx value(int t, int x) const;
  int exponent(int t, int x) const;

  OneCochain inverted() const;  // pointwise inverse (= conjugate)

 private:
  std::size_t idx(int t, int x) const {
    return static_cast<std::size_t>(t) * n_points_ + x;
  }
  CocycleMode mode_ = CocycleMode::Exact;
  int n_group_ = 1, n_points_ = 1, modulus_ = 1;
  std::vector<int> exponents_;
  std::vector<cplx> values_;
};

struct CocycleWitness {
  int r, s, t, x;
  cplx lhs, rhs;
};

/// alpha_r(u(s,t)) u(r,st) = u(r,s) u(rs,t) pointwise. Exact mode compares
/// exponents mod m; complex mode uses tolerance 1e-10.
std::optional<CocycleWitness> check_cocycle_identity(const Cocycle& u,
                                                     const FiniteAction& act);

/// d2(xi)(s,t) = alpha_s(xi(t)) xi(st)^{-1} xi(s).
Cocycle coboundary(const OneCochain& xi, const FiniteAction& act);

/// Equivalent normalised cocycle u * d2(xi) with xi(1) = conj(u(1,1)),
/// together with the xi used.
std::pair<Cocycle, OneCochain> normalize(const Cocycle& u, const FiniteAction& act);

struct OneCocycleWitness {
  int s, t, x;
};

/// omega(st) = omega(s) alpha_s(omega(t)) pointwise.
std::optional<OneCocycleWitness> z1_check(const OneCochain& omega,
                                          const FiniteAction& act);

/// Solves u = v * d2(xi) in exponents over Z_m by integer Smith normal form.
/// Returns xi (so apply_cocycle_iso with xi maps F(alpha,u) to F(alpha,v)
/// multiplicatively), or nullopt when u and v lie in distinct classes.
/// Both cocycles must be exact with a common modulus.
std::optional<OneCochain> cohomologous(const Cocycle& u, const Cocycle& v,
                                       const FiniteAction& act);

/// The M_n(C) cocycle on Z_n x Z_n over a point: exponent of u((p,r),(s,t))
/// is -rs mod n.
Cocycle mn_twist_cocycle(int n);

}  // namespace xprod
