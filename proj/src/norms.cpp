#include "xprod/norms.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "xprod/errors.hpp"
#include "xprod/representations.hpp"

namespace xprod {

namespace {

bool is_inf(double p) { return std::isinf(p) && p > 0; }

double lp_norm(const Eigen::VectorXcd& v, double p) {
  if (is_inf(p)) return v.cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (int i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v(i)), p);
  return std::pow(acc, 1.0 / p);
}

Eigen::VectorXcd psi(const Eigen::VectorXcd& z, double p) {
  Eigen::VectorXcd out(z.size());
  for (int i = 0; i < z.size(); ++i) {
    const double a = std::abs(z(i));
    out(i) = a == 0.0 ? cplx{0.0, 0.0} : (z(i) / a) * std::pow(a, p - 1.0);
  }
  return out;
}

double max_col_sum(const Eigen::MatrixXcd& m) {
  double best = 0.0;
  for (int j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).cwiseAbs().sum());
  return best;
}

double max_row_sum(const Eigen::MatrixXcd& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows(); ++i) best = std::max(best, m.row(i).cwiseAbs().sum());
  return best;
}

double boyd_lower(const Eigen::MatrixXcd& m, double p, const OpNormOptions& opts,
                  int* restarts_used) {
  const double q = p / (p - 1.0);
  const int dim = static_cast<int>(m.cols());
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  double best = 0.0;
  int used = 0;
  for (int start = 0; start < opts.restarts; ++start) {
    Eigen::VectorXcd v(dim);
    if (start == 0) {
      v.setOnes();
    } else if (start == 1) {
      int j = 0;
      double cb = -1.0;
      for (int c = 0; c < dim; ++c) {
        double s = lp_norm(m.col(c), p);
        if (s > cb) { cb = s; j = c; }
      }
      v.setZero();
      v(j) = 1.0;
    } else {
      for (int i = 0; i < dim; ++i) v(i) = cplx{dist(rng), dist(rng)};
    }
    double nv = lp_norm(v, p);
    if (nv == 0.0) continue;
    v /= nv;
    ++used;
    double prev = 0.0;
    for (int it = 0; it < opts.max_iters; ++it) {
      Eigen::VectorXcd w = m * v;
      const double cur = lp_norm(w, p);
      if (cur <= 1e-300) break;
      if (std::abs(cur - prev) <= opts.tol * std::max(1.0, cur)) { prev = cur; break; }
      prev = cur;
      Eigen::VectorXcd z = m.adjoint() * psi(w, p);
      Eigen::VectorXcd v2 = psi(z, q);
      const double n2 = lp_norm(v2, p);
      if (n2 == 0.0) break;
      v = v2 / n2;
    }
    best = std::max(best, prev);
  }
  if (restarts_used) *restarts_used = used;
  return best;
}

}  // namespace

PNormResult op_norm(const Eigen::MatrixXcd& mat, double p, const OpNormOptions& opts) {
  if (std::isnan(p) || p < 1.0) throw BadExponent("operator norm needs p in [1, inf]");
  PNormResult r;
  r.p = p;
  if (opts.force_iterative && !is_inf(p) && p > 1.0) {
    r.method = PNormResult::Method::Iterative;
    r.lower = boyd_lower(mat, p, opts, &r.restarts_used);
    r.value = r.lower;
    const double q = p / (p - 1.0);
    r.upper = std::pow(max_col_sum(mat), 1.0 / p) * std::pow(max_row_sum(mat), 1.0 / q);
    return r;
  }
  if (p == 1.0) {
    r.value = r.lower = r.upper = max_col_sum(mat);
    r.method = PNormResult::Method::Exact;
    return r;
  }
  if (is_inf(p)) {
    r.value = r.lower = r.upper = max_row_sum(mat);
    r.method = PNormResult::Method::Exact;
    return r;
  }
  if (p == 2.0) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
    r.value = r.lower = r.upper = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    r.method = PNormResult::Method::Exact;
    return r;
  }
  r.method = PNormResult::Method::Iterative;
  r.lower = boyd_lower(mat, p, opts, &r.restarts_used);
  r.value = r.lower;
  const double q = p / (p - 1.0);
  r.upper = std::pow(max_col_sum(mat), 1.0 / p) * std::pow(max_row_sum(mat), 1.0 / q);
  return r;
}

double closed_form_l1(const CrossedElement& b) {
  const System& sys = *b.sys;
  double best = 0.0;
  for (int x = 0; x < sys.nX(); ++x) {
    double acc = 0.0;
    for (int t = 0; t < sys.nG(); ++t) acc += std::abs(b.coeffs(t, sys.act(t, x)));
    best = std::max(best, acc);
  }
  return best;
}

double closed_form_linf(const CrossedElement& b) {
  const System& sys = *b.sys;
  double best = 0.0;
  for (int x = 0; x < sys.nX(); ++x) {
    double acc = 0.0;
    for (int t = 0; t < sys.nG(); ++t) acc += std::abs(b.coeffs(t, x));
    best = std::max(best, acc);
  }
  return best;
}

NormPResult norm_P(const CrossedElement& b, const std::vector<double>& exponents,
                   const OpNormOptions& opts) {
  if (exponents.empty()) throw EmptyP("norm_P needs a nonempty exponent set");
  Eigen::MatrixXcd lam = regular_matrix(b).mat;
  NormPResult out;
  for (double p : exponents) {
    PNormResult r = op_norm(lam, p, opts);
    out.value = std::max(out.value, r.value);
    out.upper = std::max(out.upper, r.upper);
    out.parts.push_back(r);
  }
  return out;
}

double star_norm(const CrossedElement& b, double p, const OpNormOptions& opts) {
  Eigen::MatrixXcd lam = regular_matrix(b).mat;
  Eigen::MatrixXcd lam_star = regular_matrix(involute(b)).mat;
  return std::max(op_norm(lam, p, opts).value, op_norm(lam_star, p, opts).value);
}

double hahn_norm(const CrossedElement& b) {
  return norm_P(b, {1.0, kInfExponent}).value;
}

double anti_isometry_check(const CrossedElement& b, double p, const OpNormOptions& opts) {
  if (std::isnan(p) || p < 1.0) throw BadExponent("anti_isometry_check needs p in [1, inf]");
  const double q = is_inf(p) ? 1.0 : (p == 1.0 ? kInfExponent : p / (p - 1.0));
  Eigen::MatrixXcd lam_star = regular_matrix(involute(b)).mat;
  Eigen::MatrixXcd lam = regular_matrix(b).mat;
  return std::abs(op_norm(lam_star, p, opts).value - op_norm(lam, q, opts).value);
}

}  // namespace xprod
