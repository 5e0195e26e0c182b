#include "xprod/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "xprod/errors.hpp"
#include "xprod/representations.hpp"

namespace xprod {

FiniteGroup group_by_name(const std::string& name) {
  if (name == "z2") return make_cyclic(2);
  if (name == "z3") return make_cyclic(3);
  if (name == "z4") return make_cyclic(4);
  if (name == "z2xz2") return make_product_of_cyclics({2, 2});
  if (name == "s3") return make_symmetric(3);
  throw ParseError("unknown group name: " + name);
}

namespace {

std::vector<std::vector<int>> all_perms(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<FiniteAction> enumerate_actions(const FiniteGroup& g, int points) {
  GeneratingSet gs = generating_set(g);
  const auto perms = all_perms(points);
  const int np = static_cast<int>(perms.size());
  const int k = static_cast<int>(gs.generators.size());
  std::vector<FiniteAction> out;
  std::vector<int> assign(k, 0);
  for (;;) {
    FiniteAction a;
    a.group = g;
    a.points = points;
    a.perms.assign(g.order, std::vector<int>(points));
    for (int e = 0; e < g.order; ++e) {
      std::vector<int> p(points);
      std::iota(p.begin(), p.end(), 0);
      for (int gi : gs.words[e]) {
        // word is read left to right: element = gen_a * gen_b * ...
        std::vector<int> q(points);
        for (int x = 0; x < points; ++x) q[x] = p[perms[assign[gi]][x]];
        p = std::move(q);
      }
      a.perms[e] = std::move(p);
    }
    if (!check_action(a)) out.push_back(std::move(a));
    int i = 0;
    while (i < k && ++assign[i] == np) assign[i++] = 0;
    if (i == k) break;
    if (k == 0) break;
  }
  if (k == 0) {
    // trivial group: only the trivial action
    FiniteAction a = trivial_action(g, points);
    out.clear();
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> canonical_form(const FiniteAction& a,
                                             const std::vector<std::vector<int>>& perms) {
  std::vector<std::vector<int>> best = a.perms;
  for (const auto& sigma : perms) {
    std::vector<int> sigma_inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma_inv[sigma[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> cand(a.perms.size(), std::vector<int>(a.points));
    for (std::size_t t = 0; t < a.perms.size(); ++t)
      for (int x = 0; x < a.points; ++x)
        cand[t][x] = sigma[a.perms[t][sigma_inv[x]]];
    if (cand < best) best = std::move(cand);
  }
  return best;
}

}  // namespace

std::vector<SystemPtr> sweep_systems(const SweepOptions& opts) {
  std::vector<SystemPtr> out;
  for (const std::string& name : opts.groups) {
    FiniteGroup g = group_by_name(name);
    for (int m = 1; m <= opts.max_points; ++m) {
      std::vector<FiniteAction> actions = enumerate_actions(g, m);
      if (opts.dedup) {
        const auto perms = all_perms(m);
        std::set<std::vector<std::vector<int>>> seen;
        std::vector<FiniteAction> keep;
        for (auto& a : actions)
          if (seen.insert(canonical_form(a, perms)).second) keep.push_back(std::move(a));
        actions = std::move(keep);
      }
      int idx = 0;
      for (auto& a : actions) {
        Cocycle u = Cocycle::trivial(g.order, m);
        std::string label = name + "|X" + std::to_string(m) + "#" + std::to_string(idx);
        out.push_back(make_system(std::move(a), std::move(u), label));
        ++idx;
      }
    }
  }
  return out;
}

SweepResult run_sweep(const SweepOptions& opts) {
  SweepResult result;
  result.options = opts;
  std::vector<SystemPtr> systems = sweep_systems(opts);
  std::uint64_t index = 0;
  for (const SystemPtr& sys : systems) {
    SweepItem item;
    item.sys = sys;
    item.group_name = sys->group().label;
    item.points = sys->nX();
    item.action_index = static_cast<int>(index);
    const std::uint64_t item_seed = splitmix64(opts.seed ^ index);
    item.simplicity = verify_simplicity_theorem(sys, item_seed);
    item.detection = verify_twisted_detection_theorem(sys, item_seed);
    item.lattice = verify_lattice_isomorphism(sys, item_seed);
    item.maximal_abelian = is_maximal_abelian(sys);
    item.maximal_abelian_consistent = item.maximal_abelian == is_free(sys->action);
    item.consistent = item.simplicity.consistent && item.detection.consistent &&
                      item.lattice.consistent && item.maximal_abelian_consistent;
    if (item.consistent) ++result.consistent_count;
    result.items.push_back(std::move(item));
    ++index;
  }
  result.all_consistent =
      result.consistent_count == static_cast<int>(result.items.size());
  return result;
}

}  // namespace xprod
