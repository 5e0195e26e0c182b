#include "xprod/representations.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "xprod/errors.hpp"
#include "xprod/norms.hpp"

namespace xprod {

RepMatrix regular_matrix(const CrossedElement& b) {
  const System& sys = *b.sys;
  const int n = sys.nG(), m = sys.nX();
  RepMatrix rep;
  rep.kind = RepKind::Regular;
  rep.sys = b.sys;
  rep.mat = Eigen::MatrixXcd::Zero(n * m, n * m);
  for (int x = 0; x < m; ++x)
    for (int t = 0; t < n; ++t) {
      const int row = x * n + t;
      for (int s = 0; s < n; ++s) {
        const int st = sys.group().mul(sys.group().inv(s), t);
        const int y = sys.act_inv(s, x);
        rep.mat(row, y * n + st) += b.coeffs(s, x) * sys.u(s, st, x);
      }
    }
  return rep;
}

RepMatrix trivial_rep_matrix(const CrossedElement& b) {
  const System& sys = *b.sys;
  if (!sys.cocycle.is_trivial())
    throw Twisted("the C(X)-trivial representation only exists untwisted");
  const int n = sys.nG(), m = sys.nX();
  RepMatrix rep;
  rep.kind = RepKind::Trivial;
  rep.sys = b.sys;
  rep.mat = Eigen::MatrixXcd::Zero(m, m);
  for (int x = 0; x < m; ++x)
    for (int s = 0; s < n; ++s) rep.mat(x, sys.act_inv(s, x)) += b.coeffs(s, x);
  return rep;
}

RepMatrix induced_point_matrix(const CrossedElement& b, int x) {
  const System& sys = *b.sys;
  if (x < 0 || x >= sys.nX()) throw DimensionMismatch("induced point out of range");
  const int n = sys.nG();
  RepMatrix rep;
  rep.kind = RepKind::Induced;
  rep.sys = b.sys;
  rep.induced_point = x;
  rep.mat = Eigen::MatrixXcd::Zero(n, n);
  for (int t = 0; t < n; ++t) {
    const int xt = sys.act(t, x);
    for (int s = 0; s < n; ++s) {
      const int col = sys.group().mul(sys.group().inv(s), t);
      rep.mat(t, col) += b.coeffs(s, xt) * sys.u(s, col, xt);
    }
  }
  return rep;
}

OrbitDecompositionReport orbit_decomposition_check(const CrossedElement& b) {
  const System& sys = *b.sys;
  const int n = sys.nG(), m = sys.nX();
  const int dim = n * m;
  const auto orbs = orbits(sys.action);

  std::vector<int> rep_of(m), carrier(m);  // carrier[x]: phi_{carrier[x]}(rep) = x
  for (const auto& o : orbs) {
    const int r = o.front();
    for (int x : o) {
      rep_of[x] = r;
      for (int t = 0; t < n; ++t)
        if (sys.act(t, r) == x) { carrier[x] = t; break; }
    }
  }

  // T 1_{(y,t)} = u(t, r_x)(phi_{t r_x}(x0)) 1_{(x, t r_x)} with x = phi_{t^{-1}}(y)
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(dim, dim);
  for (int y = 0; y < m; ++y)
    for (int t = 0; t < n; ++t) {
      const int x = sys.act_inv(t, y);
      const int x0 = rep_of[x];
      const int r = carrier[x];
      const int tr = sys.group().mul(t, r);
      T(x * n + tr, y * n + t) = sys.u(t, r, sys.act(tr, x0));
    }

  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<Eigen::MatrixXcd> ind_blocks(m);
  for (const auto& o : orbs) {
    Eigen::MatrixXcd blk = induced_point_matrix(b, o.front()).mat;
    for (int x : o) ind_blocks[x] = blk;
  }
  for (int x = 0; x < m; ++x) D.block(x * n, x * n, n, n) = ind_blocks[x];

  RepMatrix lam = regular_matrix(b);
  OrbitDecompositionReport out;
  out.similarity_residual = (T * lam.mat - D * T).cwiseAbs().maxCoeff();

  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    double whole = op_norm(lam.mat, p).value;
    double best = 0.0;
    for (const auto& o : orbs)
      best = std::max(best, op_norm(induced_point_matrix(b, o.front()).mat, p).value);
    double dev = std::abs(whole - best);
    if (p == 1.0) out.norm_deviation_1 = dev;
    else if (p == 2.0) out.norm_deviation_2 = dev;
    else out.norm_deviation_inf = dev;
  }
  out.ok = out.similarity_residual <= 1e-10 && out.norm_deviation_1 <= 1e-9 &&
           out.norm_deviation_2 <= 1e-9 && out.norm_deviation_inf <= 1e-9;
  return out;
}

CovariantPair regular_covariant_pair(const SystemPtr& sys) {
  const int n = sys->nG(), m = sys->nX();
  const int dim = n * m;
  CovariantPair pair;
  pair.dim = dim;
  pair.pi.assign(m, Eigen::MatrixXcd::Zero(dim, dim));
  for (int x = 0; x < m; ++x)
    for (int t = 0; t < n; ++t) pair.pi[x](x * n + t, x * n + t) = 1.0;
  pair.v.assign(n, Eigen::MatrixXcd::Zero(dim, dim));
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < m; ++x)
      for (int t = 0; t < n; ++t) {
        const int st = sys->group().mul(sys->group().inv(s), t);
        pair.v[s](x * n + t, sys->act_inv(s, x) * n + st) = sys->u(s, st, x);
      }
  return pair;
}

CovariantPair trivial_covariant_pair(const SystemPtr& sys) {
  const int n = sys->nG(), m = sys->nX();
  CovariantPair pair;
  pair.dim = m;
  pair.pi.assign(m, Eigen::MatrixXcd::Zero(m, m));
  for (int x = 0; x < m; ++x) pair.pi[x](x, x) = 1.0;
  pair.v.assign(n, Eigen::MatrixXcd::Zero(m, m));
  for (int t = 0; t < n; ++t)
    for (int x = 0; x < m; ++x) pair.v[t](x, sys->act_inv(t, x)) = 1.0;
  return pair;
}

CovariantPair clock_shift_pair(int n) {
  CovariantPair pair;
  pair.dim = n;
  pair.pi.assign(1, Eigen::MatrixXcd::Identity(n, n));
  Eigen::MatrixXcd clock = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    const double ang = 2.0 * std::numbers::pi * r / n;
    clock(r, r) = cplx{std::cos(ang), std::sin(ang)};
    shift((r + 1) % n, r) = 1.0;
  }
  pair.v.assign(n * n, Eigen::MatrixXcd::Identity(n, n));
  for (int g = 0; g < n * n; ++g) {
    const int s = g / n, t = g % n;
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < s; ++i) w = w * clock;
    for (int i = 0; i < t; ++i) w = w * shift;
    pair.v[g] = w;
  }
  return pair;
}

namespace {
Eigen::MatrixXcd pi_of(const CovariantPair& pair, const Eigen::VectorXcd& a) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
  for (std::size_t x = 0; x < pair.pi.size(); ++x) out += a(static_cast<int>(x)) * pair.pi[x];
  return out;
}
}  // namespace

std::optional<CovariantWitness> verify_covariant(const CovariantPair& pair,
                                                 const SystemPtr& sys, double tol) {
  const int n = sys->nG(), m = sys->nX();
  if (static_cast<int>(pair.pi.size()) != m || static_cast<int>(pair.v.size()) != n)
    throw DimensionMismatch("covariant pair has wrong shape");
  for (const auto& mt : pair.pi)
    if (mt.rows() != pair.dim || mt.cols() != pair.dim)
      throw DimensionMismatch("pi matrix has wrong dimension");
  for (const auto& mt : pair.v)
    if (mt.rows() != pair.dim || mt.cols() != pair.dim)
      throw DimensionMismatch("v matrix has wrong dimension");

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(pair.dim, pair.dim);
  // pi is a non-degenerate representation of C(X): orthogonal idempotents summing to 1
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
  for (int x = 0; x < m; ++x) {
    sum += pair.pi[x];
    for (int y = 0; y < m; ++y) {
      Eigen::MatrixXcd prod = pair.pi[x] * pair.pi[y];
      Eigen::MatrixXcd expect = (x == y) ? pair.pi[x] : Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
      double dev = (prod - expect).cwiseAbs().maxCoeff();
      if (dev > tol)
        return CovariantWitness{CovariantWitness::Relation::Resolution, -1, -1, x, dev};
    }
  }
  {
    double dev = (sum - id).cwiseAbs().maxCoeff();
    if (dev > tol)
      return CovariantWitness{CovariantWitness::Relation::Resolution, -1, -1, -1, dev};
  }
  // v_s v_t = pi(u(s,t)) v_{st}
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Eigen::VectorXcd uval(m);
      for (int x = 0; x < m; ++x) uval(x) = sys->u(s, t, x);
      Eigen::MatrixXcd rhs = pi_of(pair, uval) * pair.v[sys->group().mul(s, t)];
      double dev = (pair.v[s] * pair.v[t] - rhs).cwiseAbs().maxCoeff();
      if (dev > tol)
        return CovariantWitness{CovariantWitness::Relation::Multiplication, s, t, -1, dev};
    }
  // v_t pi_x v_t^{-1} = pi_{phi_t(x)}
  for (int t = 0; t < n; ++t) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(pair.v[t]);
    if (!lu.isInvertible())
      return CovariantWitness{CovariantWitness::Relation::TwistedCommutation, -1, t, -1,
                              std::numeric_limits<double>::infinity()};
    Eigen::MatrixXcd vinv = lu.inverse();
    for (int x = 0; x < m; ++x) {
      double dev =
          (pair.v[t] * pair.pi[x] * vinv - pair.pi[sys->act(t, x)]).cwiseAbs().maxCoeff();
      if (dev > tol)
        return CovariantWitness{CovariantWitness::Relation::TwistedCommutation, -1, t, x, dev};
    }
  }
  return std::nullopt;
}

Eigen::MatrixXcd integrate(const CovariantPair& pair, const CrossedElement& b) {
  const int n = b.sys->nG(), m = b.sys->nX();
  if (static_cast<int>(pair.pi.size()) != m || static_cast<int>(pair.v.size()) != n)
    throw DimensionMismatch("covariant pair does not match the system");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
  for (int t = 0; t < n; ++t) out += pi_of(pair, b.coeffs.row(t).transpose()) * pair.v[t];
  return out;
}

Eigen::VectorXcd matrix_fourier_extract(const RepMatrix& rep, int s) {
  if (rep.kind != RepKind::Regular || !rep.sys)
    throw BadBasis("Fourier extraction needs a regular-kind matrix");
  const System& sys = *rep.sys;
  const int n = sys.nG(), m = sys.nX();
  Eigen::VectorXcd out(m);
  const int t0 = 0;
  const int st = sys.group().mul(sys.group().inv(s), t0);
  for (int x = 0; x < m; ++x) {
    const int y = sys.act_inv(s, x);
    out(x) = rep.mat(x * n + t0, y * n + st) * std::conj(sys.u(s, st, x));
  }
  return out;
}

bool in_algebra(const RepMatrix& rep) {
  if (rep.kind != RepKind::Regular || !rep.sys)
    throw BadBasis("in_algebra needs a regular-kind matrix");
  const System& sys = *rep.sys;
  const int n = sys.nG(), m = sys.nX();
  const double tol = 1e-9;
  // off the sparsity pattern everything must vanish
  for (int x = 0; x < m; ++x)
    for (int t = 0; t < n; ++t)
      for (int y = 0; y < m; ++y)
        for (int r = 0; r < n; ++r) {
          const int s = sys.group().mul(t, sys.group().inv(r));
          if (sys.act_inv(s, x) != y &&
              std::abs(rep.mat(x * n + t, y * n + r)) > tol)
            return false;
        }
  // reads of E_s must not depend on t
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < m; ++x) {
      cplx first{};
      for (int t = 0; t < n; ++t) {
        const int st = sys.group().mul(sys.group().inv(s), t);
        const int y = sys.act_inv(s, x);
        cplx val = rep.mat(x * n + t, y * n + st) * std::conj(sys.u(s, st, x));
        if (t == 0) first = val;
        else if (std::abs(val - first) > tol) return false;
      }
    }
  return true;
}

Commutant commutant_of_coefficients(const SystemPtr& sys) {
  const int n = sys->nG(), m = sys->nX();
  const int dim = n * m;
  const int nbasis = dim;
  std::vector<Eigen::MatrixXcd> basis(nbasis);
  for (int x = 0; x < m; ++x)
    for (int t = 0; t < n; ++t) {
      CrossedElement e = zero_element(sys);
      e.coeffs(t, x) = 1.0;
      basis[x * n + t] = regular_matrix(e).mat;
    }
  std::vector<Eigen::MatrixXcd> diag(m);
  for (int x = 0; x < m; ++x) diag[x] = basis[x * n + 0];  // Lambda(delta_x delta_1)

  Eigen::MatrixXcd A(static_cast<Eigen::Index>(m) * dim * dim, nbasis);
  for (int j = 0; j < nbasis; ++j)
    for (int k = 0; k < m; ++k) {
      Eigen::MatrixXcd c = basis[j] * diag[k] - diag[k] * basis[j];
      A.block(static_cast<Eigen::Index>(k) * dim * dim, j, dim * dim, 1) =
          Eigen::Map<Eigen::VectorXcd>(c.data(), dim * dim);
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  Commutant out;
  out.dimension = nbasis - rank;
  for (int k = rank; k < nbasis; ++k) {
    Eigen::VectorXcd c = svd.matrixV().col(k);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < nbasis; ++j) M += c(j) * basis[j];
    out.basis.push_back(std::move(M));
  }
  return out;
}

bool is_maximal_abelian(const SystemPtr& sys) {
  return commutant_of_coefficients(sys).dimension == sys->nX();
}

PinchingWitness pinching_witness(const CrossedElement& b, int t) {
  const System& sys = *b.sys;
  const int m = sys.nX();
  int best = 0;
  for (int x = 1; x < m; ++x)
    if (std::abs(b.coeffs(t, x)) > std::abs(b.coeffs(t, best))) best = x;
  PinchingWitness out;
  out.h = Eigen::VectorXd::Zero(m);
  out.h(best) = 1.0;

  const double sup = b.coeffs.row(t).cwiseAbs().maxCoeff();
  const double pinched = std::abs(b.coeffs(t, best));
  out.sup_residual = sup - pinched;

  Eigen::VectorXcd hvec = out.h.cast<cplx>();
  CrossedElement hd1 = embed(b.sys, hvec);
  CrossedElement hdt = zero_element(b.sys);
  hdt.coeffs.row(t) = hvec.transpose();
  CrossedElement pinched_elem = convolve(convolve(hd1, b), involute(hdt));
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(m);
  target(best) = b.coeffs(t, best);
  CrossedElement diff = pinched_elem - embed(b.sys, target);
  out.algebra_residual = ell1_norm(diff);
  return out;
}

}  // namespace xprod
