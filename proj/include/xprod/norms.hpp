#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "xprod/crossed.hpp"

namespace xprod {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

struct OpNormOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iters = 10000;
  bool force_iterative = false;  // run the power iteration even at p in {1,2,inf}
};

struct PNormResult {
  double p = 2.0;
  double value = 0.0;
  enum class Method { Exact, Iterative } method = Method::Exact;
  double lower = 0.0, upper = 0.0;
  int restarts_used = 0;
};

/// Operator p-norm. p = 1 and inf are column/row sums, p = 2 the largest
/// singular value; other p use the power iteration
///   v <- Psi_q(M^H Psi_p(M v)),  Psi_p(z) = phase(z) |z|^{p-1},
/// multi-started, with the interpolation bound ||M||_1^{1/p} ||M||_inf^{1-1/p}
/// as the reported upper bound.
PNormResult op_norm(const Eigen::MatrixXcd& mat, double p, const OpNormOptions& opts = {});

/// max_x sum_t |b(t)(phi_t(x))|: the L^1 norm of b, equal to the operator
/// 1-norm (max column sum) of the regular matrix.
double closed_form_l1(const CrossedElement& b);
/// max_x sum_t |b(t)(x)|: the L^inf norm of b, the max row sum of the
/// regular matrix.
double closed_form_linf(const CrossedElement& b);

struct NormPResult {
  double value = 0.0;
  double upper = 0.0;
  std::vector<PNormResult> parts;
};
/// sup_{p in P} of the L^p norms of b, through the regular matrix.
NormPResult norm_P(const CrossedElement& b, const std::vector<double>& exponents,
                   const OpNormOptions& opts = {});

/// max of the norms of b and b* at p.
double star_norm(const CrossedElement& b, double p, const OpNormOptions& opts = {});

/// Hahn's I-norm: norm_P with P = {1, inf}.
double hahn_norm(const CrossedElement& b);

/// | ||Lambda(b*)||_p - ||Lambda(b)||_q | for the conjugate exponent q.
double anti_isometry_check(const CrossedElement& b, double p,
                           const OpNormOptions& opts = {});

}  // namespace xprod
