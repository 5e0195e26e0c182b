#pragma once

#include <optional>
#include <vector>

#include "xprod/crossed.hpp"

namespace xprod {

enum class RepKind { Regular, Trivial, Induced, Custom };

/// Dense matrix of a represented element. Regular kind acts on basis (x,t),
/// lexicographic with x major: row index = x*|G| + t.
struct RepMatrix {
  RepKind kind = RepKind::Custom;
  SystemPtr sys;
  Eigen::MatrixXcd mat;
  int induced_point = -1;

  int dim() const { return static_cast<int>(mat.rows()); }
};

/// Lambda(b) on l^p(X x G); the same matrix serves every p.
RepMatrix regular_matrix(const CrossedElement& b);

/// The C(X)-trivial representation; untwisted systems only.
RepMatrix trivial_rep_matrix(const CrossedElement& b);

/// Representation induced by evaluation at the point x, on l^p(G).
RepMatrix induced_point_matrix(const CrossedElement& b, int x);

/// Explicit signed-permutation similarity betweenLambda(b) and the direct
/// sum over X of induced matrices at orbit representatives, plus the norm
/// comparison at p = 1, 2, inf.
struct OrbitDecompositionReport {
  double similarity_residual = 0.0;
  double norm_deviation_1 = 0.0, norm_deviation_2 = 0.0, norm_deviation_inf = 0.0;
  bool ok = false;
};
OrbitDecompositionReport orbit_decomposition_check(const CrossedElement& b);

/// Covariant pair: pi given on the indicator basis of C(X), v on G.
struct CovariantPair {
  int dim = 0;
  std::vector<Eigen::MatrixXcd> pi;  // pi[x] = pi(indicator of x)
  std::vector<Eigen::MatrixXcd> v;   // v[t]
};

CovariantPair regular_covariant_pair(const SystemPtr& sys);
CovariantPair trivial_covariant_pair(const SystemPtr& sys);
/// Clock/shift pair for the M_n system: v_{(s,t)} = C^s S^t on C^n.
CovariantPair clock_shift_pair(int n);

struct CovariantWitness {
  enum class Relation { Resolution, Multiplication, TwistedCommutation } relation;
  int s = -1, t = -1, x = -1;
  double deviation = 0.0;
};
std::optional<CovariantWitness> verify_covariant(const CovariantPair& pair,
                                                 const SystemPtr& sys,
                                                 double tol = 1e-10);

/// pi x v (b) = sum_t pi(b(t)) v_t.
Eigen::MatrixXcd integrate(const CovariantPair& pair, const CrossedElement& b);

/// Reads E_s off a regular-kind matrix:
/// E_s(x) = M[(x,t),(phi_{s^{-1}}x, s^{-1}t)] * conj(u(s,s^{-1}t)(x)), any t.
Eigen::VectorXcd matrix_fourier_extract(const RepMatrix& rep, int s);

/// Whether the matrix lies in Lambda(F): the off-pattern entries vanish and
/// the Fourier reads are t-independent (tolerance 1e-9).
bool in_algebra(const RepMatrix& rep);

struct Commutant {
  std::vector<Eigen::MatrixXcd> basis;
  int dimension = 0;
};
/// {M in span Lambda(F) : M Lambda(a) = Lambda(a) M for all a in C(X)}.
Commutant commutant_of_coefficients(const SystemPtr& sys);
bool is_maximal_abelian(const SystemPtr& sys);

/// h = indicator of argmax_x |b(t)(x)|. First residual is
/// ||E_t(b)||_inf - ||h E_t(b) h||_inf (exactly 0 here); second is the
/// l^1 distance between h E_t(b) h and h b (h delta_t)^*.
struct PinchingWitness {
  Eigen::VectorXd h;
  double sup_residual = 0.0;
  double algebra_residual = 0.0;
};
PinchingWitness pinching_witness(const CrossedElement& b, int t);

}  // namespace xprod
