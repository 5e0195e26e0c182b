#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xprod/ideals.hpp"

namespace xprod {

FiniteGroup group_by_name(const std::string& name);  // z2, z3, z4, z2xz2, s3

/// Every action of g on {0..points-1}: all assignments of permutations to a
/// generating set that extend to homomorphisms.
std::vector<FiniteAction> enumerate_actions(const FiniteGroup& g, int points);

struct SweepOptions {
  std::vector<std::string> groups{"z2", "z3", "z4", "z2xz2", "s3"};
  int max_points = 4;
  bool dedup = false;  // deduplicate actions up to relabelling of X
  std::uint64_t seed = 0;
};

struct SweepItem {
  std::string group_name;
  int points = 0;
  int action_index = 0;
  SystemPtr sys;
  SimplicityVerdict simplicity;
  TwistedDetectionVerdict detection;
  LatticeIsoVerdict lattice;
  bool maximal_abelian = false;
  bool maximal_abelian_consistent = false;  // maximal abelian iff free
  bool consistent = false;
};

struct SweepResult {
  SweepOptions options;
  std::vector<SweepItem> items;
  int consistent_count = 0;
  bool all_consistent = false;
};

/// Runs `verify` over every untwisted system in the catalog.
SweepResult run_sweep(const SweepOptions& opts);

/// The systems alone (no verdicts); used to draw random elements.
std::vector<SystemPtr> sweep_systems(const SweepOptions& opts);

}  // namespace xprod
