#include "xprod/ideals.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "xprod/errors.hpp"
#include "xprod/representations.hpp"

namespace xprod {

namespace {

constexpr double kMembershipTol = 1e-8;
constexpr double kEigenSepTol = 1e-6;
constexpr int kMaxRetries = 8;

Eigen::VectorXcd vec(const Eigen::MatrixXcd& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

int numeric_rank(const Eigen::MatrixXcd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  if (!sv.size()) return 0;
  const double cutoff = std::max(1e-10, 1e-8 * sv(0));
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace

std::vector<int> ideal_blocks(IdealMask mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (IdealMask{1} << i)) out.push_back(i);
  return out;
}

BlockDecomposition block_decompose(const SystemPtr& sys, std::uint64_t seed) {
  BlockDecomposition d;
  d.sys = sys;
  const int n = sys->nG(), m = sys->nX();
  const int dim = n * m;
  const int nbasis = dim;

  d.algebra_basis.resize(nbasis);
  for (int x = 0; x < m; ++x)
    for (int t = 0; t < n; ++t) {
      CrossedElement e = zero_element(sys);
      e.coeffs(t, x) = 1.0;
      d.algebra_basis[x * n + t] = regular_matrix(e).mat;
    }

  // center: coefficient vectors commuting with every basis matrix
  Eigen::MatrixXcd cm(static_cast<Eigen::Index>(nbasis) * dim * dim, nbasis);
  for (int j = 0; j < nbasis; ++j)
    for (int k = 0; k < nbasis; ++k) {
      Eigen::MatrixXcd c = d.algebra_basis[j] * d.algebra_basis[k] -
                           d.algebra_basis[k] * d.algebra_basis[j];
      cm.block(static_cast<Eigen::Index>(k) * dim * dim, j, dim * dim, 1) = vec(c);
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cm, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  const int r = nbasis - rank;  // number of blocks
  if (r < 1) throw DecompositionUnstable("empty center");
  std::vector<Eigen::MatrixXcd> center(r);
  for (int k = 0; k < r; ++k) {
    Eigen::VectorXcd c = svd.matrixV().col(rank + k);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < nbasis; ++j) z += c(j) * d.algebra_basis[j];
    center[k] = std::move(z);
  }

  // split the center along the spectrum of a random central element
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> dist(0.0, 1.0);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  std::vector<Eigen::MatrixXcd> idem;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < r; ++k) z += cplx{dist(rng), dist(rng)} * center[k];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(z);
    if (es.info() != Eigen::Success) continue;
    const auto& ev = es.eigenvalues();
    // chain-cluster the eigenvalues at the separation tolerance
    std::vector<int> cluster(dim, -1);
    std::vector<cplx> centers;
    for (int i = 0; i < dim; ++i) {
      bool placed = false;
      for (std::size_t c = 0; c < centers.size() && !placed; ++c)
        if (std::abs(ev(i) - centers[c]) < kEigenSepTol) {
          cluster[i] = static_cast<int>(c);
          placed = true;
        }
      if (!placed) {
        cluster[i] = static_cast<int>(centers.size());
        centers.push_back(ev(i));
      }
    }
    if (static_cast<int>(centers.size()) != r) continue;
    // spectral projector per cluster out of the eigenbasis
    Eigen::MatrixXcd q = es.eigenvectors();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(q);
    if (!lu.isInvertible()) continue;
    Eigen::MatrixXcd qi = lu.inverse();
    std::vector<Eigen::MatrixXcd> cand(r, Eigen::MatrixXcd::Zero(dim, dim));
    for (int i = 0; i < dim; ++i) cand[cluster[i]] += q.col(i) * qi.row(i);
    // validate: idempotent, orthogonal, sum to 1, central
    bool good = true;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < r && good; ++i) {
      sum += cand[i];
      for (int j = 0; j < r && good; ++j) {
        Eigen::MatrixXcd prod = cand[i] * cand[j];
        Eigen::MatrixXcd expect = (i == j) ? cand[i] : Eigen::MatrixXcd::Zero(dim, dim);
        if ((prod - expect).cwiseAbs().maxCoeff() > kMembershipTol) good = false;
      }
    }
    if (good && (sum - id).cwiseAbs().maxCoeff() > kMembershipTol) good = false;
    for (int i = 0; i < r && good; ++i)
      for (int j = 0; j < nbasis && good; ++j)
        if ((cand[i] * d.algebra_basis[j] - d.algebra_basis[j] * cand[i])
                .cwiseAbs()
                .maxCoeff() > kMembershipTol)
          good = false;
    if (!good) continue;
    idem = std::move(cand);
    break;
  }
  if (idem.empty())
    throw DecompositionUnstable("central idempotents did not stabilise");

  // block dimensions via the rank of e_i * span
  std::vector<int> dims(r, 0);
  for (int i = 0; i < r; ++i) {
    Eigen::MatrixXcd stack(static_cast<Eigen::Index>(dim) * dim, nbasis);
    for (int j = 0; j < nbasis; ++j) stack.col(j) = vec(idem[i] * d.algebra_basis[j]);
    const int rk = numeric_rank(stack);
    const int di = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rk))));
    if (di * di != rk)
      throw DecompositionUnstable("block rank is not a perfect square");
    dims[i] = di;
  }
  int total = 0;
  for (int i = 0; i < r; ++i) total += dims[i] * dims[i];
  if (total != nbasis)
    throw DecompositionUnstable("block dimensions do not fill the algebra");

  // canonical block order: first touched basis element, then dimension
  std::vector<int> first_touch(r, nbasis);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < nbasis; ++j)
      if ((idem[i] * d.algebra_basis[j]).cwiseAbs().maxCoeff() > kMembershipTol) {
        first_touch[i] = j;
        break;
      }
  std::vector<int> order(r);
  for (int i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (first_touch[a] != first_touch[b]) return first_touch[a] < first_touch[b];
    return dims[a] < dims[b];
  });
  d.idempotents.resize(r);
  d.block_dims.resize(r);
  for (int i = 0; i < r; ++i) {
    d.idempotents[i] = idem[order[i]];
    d.block_dims[i] = dims[order[i]];
  }

  if (r > 20) throw OrderTooLarge("more than 20 blocks; ideal lattice out of desk scale");

  d.coeff_touch.assign(m, 0);
  d.element_touch.assign(m, 0);
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < r; ++i) {
      bool touch1 = (d.idempotents[i] * d.algebra_basis[x * n + 0]).cwiseAbs().maxCoeff() >
                    kMembershipTol;
      bool touch_any = touch1;
      for (int t = 1; t < n && !touch_any; ++t)
        touch_any = (d.idempotents[i] * d.algebra_basis[x * n + t]).cwiseAbs().maxCoeff() >
                    kMembershipTol;
      if (touch1) d.coeff_touch[x] |= IdealMask{1} << i;
      if (touch_any) d.element_touch[x] |= IdealMask{1} << i;
    }
  return d;
}

std::vector<IdealMask> ideal_lattice(const BlockDecomposition& d) {
  const int r = d.blocks();
  std::vector<IdealMask> out;
  out.reserve(std::size_t{1} << r);
  for (IdealMask mask = 0; mask < (IdealMask{1} << r); ++mask) out.push_back(mask);
  return out;
}

bool is_simple(const BlockDecomposition& d) { return d.blocks() == 1; }

std::vector<int> res(const BlockDecomposition& d, IdealMask j) {
  std::vector<int> out;
  for (int x = 0; x < d.sys->nX(); ++x)
    if ((d.coeff_touch[x] & ~j) == 0) out.push_back(x);
  if (!is_invariant_set(d.sys->action, out))
    throw DecompositionUnstable("res support is not orbit saturated");
  return out;
}

IdealMask ex(const BlockDecomposition& d, const std::vector<int>& u) {
  if (!is_invariant_set(d.sys->action, u))
    throw NotInvariant("Ex needs a union of orbits");
  IdealMask mask = 0;
  for (int x : u) mask |= d.element_touch[x];
  return mask;
}

std::optional<GaloisWitness> galois_check(const BlockDecomposition& d) {
  InvariantSetLattice lat = invariant_lattice(d.sys->action);
  std::vector<IdealMask> ideals = ideal_lattice(d);
  for (const auto& u : lat.members) {
    IdealMask exu = ex(d, u);
    for (IdealMask j : ideals) {
      std::vector<int> rj = res(d, j);
      std::set<int> rset(rj.begin(), rj.end());
      bool u_in_res = true;
      for (int x : u)
        if (!rset.count(x)) { u_in_res = false; break; }
      bool ex_in_j = (exu & ~j) == 0;
      if (u_in_res != ex_in_j) return GaloisWitness{u, j};
    }
  }
  return std::nullopt;
}

bool detects_ideals(const BlockDecomposition& d) {
  return hidden_ideal(d) == 0;
}

IdealMask hidden_ideal(const BlockDecomposition& d) {
  IdealMask hidden = 0;
  for (int i = 0; i < d.blocks(); ++i) {
    IdealMask single = IdealMask{1} << i;
    if (res(d, single).empty()) hidden |= single;
  }
  return hidden;
}

bool separates_ideals(const BlockDecomposition& d) {
  std::set<std::vector<int>> images;
  for (IdealMask j : ideal_lattice(d))
    if (!images.insert(res(d, j)).second) return false;
  return true;
}

std::vector<IdealMask> prime_space(const BlockDecomposition& d) {
  std::vector<IdealMask> out;
  const IdealMask full = d.full_mask();
  for (int i = 0; i < d.blocks(); ++i) out.push_back(full & ~(IdealMask{1} << i));
  return out;
}

QuasiOrbitReport quasi_orbit_map_check(const BlockDecomposition& d) {
  QuasiOrbitReport rep;
  const auto orbs = orbits(d.sys->action);
  std::vector<int> hits(orbs.size(), 0);
  bool all_defined = true;
  for (IdealMask p : prime_space(d)) {
    QuasiOrbitEntry e;
    e.prime = p;
    e.res_set = res(d, p);
    std::set<int> in(e.res_set.begin(), e.res_set.end());
    std::vector<int> complement;
    for (int x = 0; x < d.sys->nX(); ++x)
      if (!in.count(x)) complement.push_back(x);
    for (std::size_t o = 0; o < orbs.size(); ++o)
      if (orbs[o] == complement) { e.orbit_index = static_cast<int>(o); break; }
    if (e.orbit_index < 0) all_defined = false;
    else ++hits[e.orbit_index];
    rep.entries.push_back(std::move(e));
  }
  rep.bijection = all_defined && std::all_of(hits.begin(), hits.end(),
                                             [](int h) { return h == 1; });
  rep.expected_bijection = separates_ideals(d);
  rep.consistent = rep.bijection == rep.expected_bijection;
  return rep;
}

SimplicityVerdict verify_simplicity_theorem(const SystemPtr& sys, std::uint64_t seed) {
  BlockDecomposition d = block_decompose(sys, seed);
  SimplicityVerdict v;
  v.untwisted = sys->cocycle.is_trivial();
  v.is_free = is_free(sys->action);
  v.is_minimal = is_minimal(sys->action);
  v.is_simple = is_simple(d);
  v.detects = detects_ideals(d);
  v.block_dims = d.block_dims;
  if (v.untwisted)
    v.consistent = v.is_simple == (v.is_free && v.is_minimal);
  else
    v.consistent = v.is_simple == (v.detects && v.is_minimal);
  return v;
}

TwistedDetectionVerdict verify_twisted_detection_theorem(const SystemPtr& sys,
                                                         std::uint64_t seed) {
  TwistedDetectionVerdict v;
  v.is_free = is_free(sys->action);
  v.all_detect = true;
  for (const Subgroup& h : cyclic_subgroups(sys->group())) {
    SystemPtr sub = restrict_to_subgroup(sys, h);
    BlockDecomposition d = block_decompose(sub, seed);
    SubgroupDetection sd;
    sd.elements = h.elements;
    sd.detects = detects_ideals(d);
    if (!sd.detects) v.all_detect = false;
    v.per_subgroup.push_back(std::move(sd));
  }
  v.consistent = v.is_free == v.all_detect;
  return v;
}

LatticeIsoVerdict verify_lattice_isomorphism(const SystemPtr& sys, std::uint64_t seed) {
  BlockDecomposition d = block_decompose(sys, seed);
  InvariantSetLattice lat = invariant_lattice(sys->action);
  std::vector<IdealMask> ideals = ideal_lattice(d);
  LatticeIsoVerdict v;
  v.residually_free = is_residually_free(sys->action);
  v.untwisted = sys->cocycle.is_trivial();
  v.invariant_count = lat.members.size();
  v.ideal_count = ideals.size();
  v.separates = separates_ideals(d);

  bool iso = lat.members.size() == ideals.size();
  if (iso) {
    std::vector<IdealMask> images;
    std::set<IdealMask> seen;
    for (const auto& u : lat.members) {
      IdealMask e = ex(d, u);
      images.push_back(e);
      if (!seen.insert(e).second) iso = false;
    }
    if (iso) {
      // order-preserving in both directions
      for (std::size_t a = 0; a < lat.members.size() && iso; ++a)
        for (std::size_t b = 0; b < lat.members.size() && iso; ++b) {
          std::set<int> sb(lat.members[b].begin(), lat.members[b].end());
          bool u_sub = std::all_of(lat.members[a].begin(), lat.members[a].end(),
                                   [&](int x) { return sb.count(x) > 0; });
          bool i_sub = (images[a] & ~images[b]) == 0;
          if (u_sub != i_sub) iso = false;
        }
    }
  }
  v.lattice_isomorphism = iso;
  // residual freeness forces the isomorphism for every crossed product; the
  // converse direction of the theorem concerns the untwisted algebra only
  if (v.residually_free)
    v.consistent = v.lattice_isomorphism;
  else
    v.consistent = v.untwisted ? !v.separates : true;
  return v;
}

}  // namespace xprod
