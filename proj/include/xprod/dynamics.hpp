#pragma once

#include <optional>
#include <vector>

#include "xprod/group.hpp"

namespace xprod {

/// Action of a finite group on X = {0..points-1} by permutations;
/// perms[t][x] = phi_t(x). perms[0] must be the identity permutation and
/// perms[s] o perms[t] = perms[s*t].
struct FiniteAction {
  FiniteGroup group;
  int points = 1;
  std::vector<std::vector<int>> perms;

  int apply(int t, int x) const { return perms[t][x]; }
  /// phi_{t^{-1}}(x); pullback used to realise alpha_t(a) = a o phi_{t^{-1}}.
  int apply_inv(int t, int x) const { return perms[group.inv(t)][x]; }
};

FiniteAction trivial_action(FiniteGroup g, int points);

struct ActionWitness {
  int s, t, x;
};

/// Homomorphism check; a witness (s,t,x) has phi_s(phi_t(x)) != phi_{st}(x).
std::optional<ActionWitness> check_action(const FiniteAction& a);

std::vector<int> fixed_points(const FiniteAction& a, int t);

/// Freeness: Fix(t) empty for every t != 1. On finite discrete X this is the
/// same as topological freeness.
bool is_free(const FiniteAction& a);

/// Orbits, each sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> orbits(const FiniteAction& a);

bool is_minimal(const FiniteAction& a);

/// All unions of orbits, ordered by size then lexicographically.
struct InvariantSetLattice {
  std::vector<std::vector<int>> orbits;
  std::vector<std::vector<int>> members;
};
InvariantSetLattice invariant_lattice(const FiniteAction& a);

/// On finite discrete X orbit closures are orbits, so this equals orbits(a);
/// emitted under its own name so reports can read O(X) directly.
std::vector<std::vector<int>> quasi_orbit_space(const FiniteAction& a);

bool is_invariant_set(const FiniteAction& a, const std::vector<int>& s);

/// Action restricted to an invariant set, points renumbered ascending.
FiniteAction restrict_action(const FiniteAction& a, const std::vector<int>& s);

/// Freeness of the restriction to every closed invariant subset. Computed
/// independently of is_free; the two agree on finite discrete spaces.
bool is_residually_free(const FiniteAction& a);

/// Exact invariant mean f(t) = 1/|G| as a function on X.
struct InvariantMean {
  std::vector<std::vector<double>> values;  // [t][x]
};
InvariantMean exact_mean(const FiniteGroup& g, int points);

/// Hoelder split g = f^{1/p}, h = f^{1/q} with 1/p + 1/q = 1.
struct HolderSplit {
  std::vector<std::vector<double>> g, h;
  double p = 2.0, q = 2.0;
};
HolderSplit holder_split(const InvariantMean& f, double p);

/// Largest of sup_x |sum_t g(t)^p - 1|, sup_x |sum_t h(t)^q - 1| and
/// max_s sup_x |sum_t h(st) alpha_s(g(t)) - 1|.
double verify_mean_identities(const HolderSplit& split, const FiniteAction& a);

}  // namespace xprod
