#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "xprod/cocycle.hpp"

namespace xprod {

/// A twisted system (G, X, phi, u) with u normalised. Built through
/// make_system, which validates the action and the cocycle identity and
/// auto-normalises the cocycle when needed (recording the cochain used).
struct System {
  FiniteAction action;  // group lives inside
  Cocycle cocycle;
  std::string label;
  std::optional<OneCochain> normalization;  // xi applied at load, if any

  const FiniteGroup& group() const { return action.group; }
  int nG() const { return action.group.order; }
  int nX() const { return action.points; }
  int act(int t, int x) const { return action.apply(t, x); }
  int act_inv(int t, int x) const { return action.apply_inv(t, x); }
  cplx u(int s, int t, int x) const { return cocycle.value(s, t, x); }
};

using SystemPtr = std::shared_ptr<const System>;

SystemPtr make_system(FiniteAction action, Cocycle u, std::string label = "");

/// The M_n(C) system: Z_n x Z_n acting trivially on a point with the
/// exponent -rs twist.
SystemPtr make_mn_twist(int n);

/// Element of F(alpha,u) = l^1(G, C(X)); coeffs(t, x) = b(t)(x).
struct CrossedElement {
  SystemPtr sys;
  Eigen::MatrixXcd coeffs;  // nG x nX

  cplx at(int t, int x) const { return coeffs(t, x); }
};

CrossedElement zero_element(SystemPtr sys);
CrossedElement delta(SystemPtr sys, int t);
/// a * delta_1 for a in C(X).
CrossedElement embed(SystemPtr sys, const Eigen::VectorXcd& a);
CrossedElement random_element(SystemPtr sys, std::mt19937_64& rng);

CrossedElement convolve(const CrossedElement& a, const CrossedElement& b);
CrossedElement involute(const CrossedElement& b);

CrossedElement operator+(const CrossedElement& a, const CrossedElement& b);
CrossedElement operator-(const CrossedElement& a, const CrossedElement& b);
CrossedElement operator*(const CrossedElement& a, const CrossedElement& b);
CrossedElement operator*(cplx z, const CrossedElement& b);

double ell1_norm(const CrossedElement& b);
Eigen::VectorXcd fourier_coefficient(const CrossedElement& b, int t);

struct AssocWitness {
  int r, s, t, x;
  double deviation;
};

/// Associativity on basis triples delta_r, delta_s, delta_t (all of them),
/// plus `trials` random full-element triples. The basis sweep reproduces the
/// witness set of check_cocycle_identity.
std::optional<AssocWitness> associativity_probe(const SystemPtr& sys, int trials,
                                                std::uint64_t seed = 0);

SystemPtr restrict_to_subgroup(const SystemPtr& sys, const Subgroup& h);
CrossedElement restrict_to_subgroup(const CrossedElement& b, const Subgroup& h);
SystemPtr restrict_to_invariant(const SystemPtr& sys, const std::vector<int>& pts);
CrossedElement restrict_to_invariant(const CrossedElement& b, const std::vector<int>& pts);

/// Fiber of a trivial-action system over a point of X: the twisted group
/// algebra with cocycle u_x(s,t) = u(s,t)(x).
struct Fiber {
  int x = 0;
  SystemPtr point_system;
  CrossedElement element;
};
std::vector<Fiber> trivial_action_fibers(const CrossedElement& b);

/// psi(b)(t) = b(t) xi(t), mapping F(alpha,u) into the target system's
/// F(alpha,v); multiplicativity holds when u = v * d2(xi).
CrossedElement apply_cocycle_iso(const OneCochain& xi, const CrossedElement& b,
                                 SystemPtr target);

}  // namespace xprod
