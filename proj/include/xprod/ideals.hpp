#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xprod/crossed.hpp"

namespace xprod {

/// Ideal of the (semisimple) image of Lambda, as a set of Wedderburn blocks.
using IdealMask = std::uint32_t;

std::vector<int> ideal_blocks(IdealMask mask);

/// Wedderburn data of span Lambda(F): the minimal central idempotents, the
/// block dimensions d_i (sum of d_i^2 = |G||X|), and per-point incidence
/// masks used by the Res/Ex machinery.
struct BlockDecomposition {
  SystemPtr sys;
  std::vector<Eigen::MatrixXcd> algebra_basis;  // Lambda(delta_x delta_t), index x*|G|+t
  std::vector<Eigen::MatrixXcd> idempotents;
  std::vector<int> block_dims;
  std::vector<IdealMask> coeff_touch;    // blocks meeting Lambda(delta_x delta_1)
  std::vector<IdealMask> element_touch;  // blocks meeting some Lambda(delta_x delta_t)
  int blocks() const { return static_cast<int>(block_dims.size()); }
  IdealMask full_mask() const { return blocks() >= 32 ? ~IdealMask{0} : ((IdealMask{1} << blocks()) - 1); }
};

BlockDecomposition block_decompose(const SystemPtr& sys, std::uint64_t seed = 0);

/// All 2^blocks block subsets, ascending as masks.
std::vector<IdealMask> ideal_lattice(const BlockDecomposition& d);
bool is_simple(const BlockDecomposition& d);

/// Res(J) = J intersect C(X), read off as the support set; saturated to a
/// union of orbits by the restriction lemma, and checked to be one.
std::vector<int> res(const BlockDecomposition& d, IdealMask j);
/// Ex(U): smallest block subset containing Lambda(C(U) F C(U)).
IdealMask ex(const BlockDecomposition& d, const std::vector<int>& u);

struct GaloisWitness {
  std::vector<int> u;
  IdealMask j;
};
/// Adjunction U <= Res(J) iff Ex(U) <= J over the two full lattices.
std::optional<GaloisWitness> galois_check(const BlockDecomposition& d);

bool detects_ideals(const BlockDecomposition& d);
/// Union of the blocks whose singleton ideal misses C(X). Under topological
/// freeness this is the hidden ideal of the generalised intersection
/// property.
IdealMask hidden_ideal(const BlockDecomposition& d);
bool separates_ideals(const BlockDecomposition& d);

/// Prime ideals: complements of single blocks.
std::vector<IdealMask> prime_space(const BlockDecomposition& d);

struct QuasiOrbitEntry {
  IdealMask prime;
  std::vector<int> res_set;
  int orbit_index = -1;  // -1 when the complement of res is not a single orbit
};
struct QuasiOrbitReport {
  std::vector<QuasiOrbitEntry> entries;
  bool bijection = false;
  bool expected_bijection = false;  // = separates_ideals
  bool consistent = false;
};
QuasiOrbitReport quasi_orbit_map_check(const BlockDecomposition& d);

struct SimplicityVerdict {
  bool untwisted = false;
  bool is_free = false, is_minimal = false, is_simple = false, detects = false;
  bool consistent = false;
  std::vector<int> block_dims;
};
/// Untwisted: simple iff free and minimal. Twisted: simple iff C(X) detects
/// ideals and the action is minimal.
SimplicityVerdict verify_simplicity_theorem(const SystemPtr& sys, std::uint64_t seed = 0);

struct SubgroupDetection {
  std::vector<int> elements;
  bool detects = false;
};
struct TwistedDetectionVerdict {
  bool is_free = false;
  bool all_detect = false;
  bool consistent = false;
  std::vector<SubgroupDetection> per_subgroup;
};
/// Freeness iff C(X) detects ideals in the restriction to every cyclic
/// subgroup.
TwistedDetectionVerdict verify_twisted_detection_theorem(const SystemPtr& sys,
                                                         std::uint64_t seed = 0);

struct LatticeIsoVerdict {
  bool residually_free = false;
  bool untwisted = false;
  std::size_t invariant_count = 0, ideal_count = 0;
  bool lattice_isomorphism = false;  // U -> Ex(U) bijective and order-preserving
  bool separates = false;
  bool consistent = false;
};
LatticeIsoVerdict verify_lattice_isomorphism(const SystemPtr& sys, std::uint64_t seed = 0);

}  // namespace xprod
