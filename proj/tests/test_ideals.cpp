#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "xprod/errors.hpp"
#include "xprod/ideals.hpp"

using namespace xprod;

namespace {

SystemPtr z2_swap_system() {
  FiniteAction a;
  a.group = make_cyclic(2);
  a.points = 2;
  a.perms = {{0, 1}, {1, 0}};
  return make_system(a, Cocycle::trivial(2, 2), "z2swap");
}

SystemPtr z2_fixed_system() {
  FiniteAction a;
  a.group = make_cyclic(2);
  a.points = 3;
  a.perms = {{0, 1, 2}, {1, 0, 2}};
  return make_system(a, Cocycle::trivial(2, 3), "z2fix");
}

SystemPtr z2_point_system() {
  return make_system(trivial_action(make_cyclic(2), 1), Cocycle::trivial(2, 1), "z2pt");
}

SystemPtr two_orbit_system() {
  FiniteAction a;
  a.group = make_cyclic(2);
  a.points = 4;
  a.perms = {{0, 1, 2, 3}, {1, 0, 3, 2}};
  return make_system(a, Cocycle::trivial(2, 4), "z2twoorbits");
}

std::multiset<int> dims_of(const BlockDecomposition& d) {
  return {d.block_dims.begin(), d.block_dims.end()};
}

}  // namespace

TEST_CASE("block decomposition on the reference systems") {
  SUBCASE("trivial group on m points: m one-dimensional blocks") {
    SystemPtr sys =
        make_system(trivial_action(make_cyclic(1), 3), Cocycle::trivial(1, 3), "pt3");
    BlockDecomposition d = block_decompose(sys);
    CHECK(dims_of(d) == std::multiset<int>{1, 1, 1});
  }
  SUBCASE("free swap: one M_2 block") {
    BlockDecomposition d = block_decompose(z2_swap_system());
    CHECK(dims_of(d) == std::multiset<int>{2});
    CHECK(is_simple(d));
  }
  SUBCASE("mn_twist(n): a single block of dimension n") {
    for (int n : {2, 3, 4}) {
      BlockDecomposition d = block_decompose(make_mn_twist(n));
      CHECK(dims_of(d) == std::multiset<int>{n});
    }
  }
  SUBCASE("fixed point: M_2 + C + C") {
    BlockDecomposition d = block_decompose(z2_fixed_system());
    CHECK(dims_of(d) == std::multiset<int>{1, 1, 2});
    CHECK(ideal_lattice(d).size() == 8);
  }
  SUBCASE("trivial Z2 on a point: two characters") {
    BlockDecomposition d = block_decompose(z2_point_system());
    CHECK(dims_of(d) == std::multiset<int>{1, 1});
    CHECK(ideal_lattice(d).size() == 4);
  }
  SUBCASE("Wedderburn completeness") {
    for (SystemPtr sys :
         {z2_swap_system(), z2_fixed_system(), two_orbit_system(), make_mn_twist(3)}) {
      BlockDecomposition d = block_decompose(sys);
      int total = 0;
      for (int di : d.block_dims) total += di * di;
      CHECK(total == sys->nG() * sys->nX());
    }
  }
  SUBCASE("idempotents validate") {
    BlockDecomposition d = block_decompose(z2_fixed_system());
    const int dim = 6;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
      sum += d.idempotents[i];
      for (std::size_t j = 0; j < d.idempotents.size(); ++j) {
        Eigen::MatrixXcd prod = d.idempotents[i] * d.idempotents[j];
        if (i == j)
          CHECK((prod - d.idempotents[i]).cwiseAbs().maxCoeff() <= 1e-8);
        else
          CHECK(prod.cwiseAbs().maxCoeff() <= 1e-8);
      }
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("res and ex on the reference systems") {
  SUBCASE("the whole algebra restricts to X") {
    BlockDecomposition d = block_decompose(z2_fixed_system());
    CHECK(res(d, d.full_mask()) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("fixed point: the M_2 block pairs with the free orbit") {
    BlockDecomposition d = block_decompose(z2_fixed_system());
    int m2 = -1;
    for (int i = 0; i < d.blocks(); ++i)
      if (d.block_dims[i] == 2) m2 = i;
    REQUIRE(m2 >= 0);
    IdealMask j = IdealMask{1} << m2;
    CHECK(res(d, j) == std::vector<int>{0, 1});
    CHECK(ex(d, {0, 1}) == j);
  }
  SUBCASE("character blocks of the trivial action meet C(X) trivially") {
    BlockDecomposition d = block_decompose(z2_point_system());
    CHECK(res(d, IdealMask{1}).empty());
    CHECK(res(d, IdealMask{2}).empty());
    CHECK(res(d, IdealMask{3}) == std::vector<int>{0});
  }
  SUBCASE("ex rejects non-invariant sets") {
    BlockDecomposition d = block_decompose(z2_fixed_system());
    CHECK_THROWS_AS(ex(d, {0}), NotInvariant);
  }
}

TEST_CASE("the Galois adjunction holds on full lattices") {
  for (SystemPtr sys :
       {z2_swap_system(), z2_fixed_system(), z2_point_system(), two_orbit_system(),
        make_mn_twist(2)}) {
    BlockDecomposition d = block_decompose(sys);
    CHECK(!galois_check(d).has_value());
    // res(ex(U)) contains U, with equality under separation
    InvariantSetLattice lat = invariant_lattice(sys->action);
    const bool sep = separates_ideals(d);
    for (const auto& u : lat.members) {
      std::vector<int> back = res(d, ex(d, u));
      std::set<int> bs(back.begin(), back.end());
      for (int x : u) CHECK(bs.count(x) == 1);
      if (sep) CHECK(back == u);
    }
  }
}

TEST_CASE("detection, hidden ideals and separation") {
  SUBCASE("mn_twist detects for n >= 2 and its diagonal fails") {
    for (int n : {2, 3}) {
      SystemPtr mn = make_mn_twist(n);
      BlockDecomposition d = block_decompose(mn);
      CHECK(detects_ideals(d));
      Subgroup diag;
      for (int p = 0; p < n; ++p) diag.elements.push_back(p * n);
      std::sort(diag.elements.begin(), diag.elements.end());
      BlockDecomposition dh = block_decompose(restrict_to_subgroup(mn, diag));
      CHECK(!detects_ideals(dh));
    }
  }
  SUBCASE("free minimal: detects, no hidden ideal, separates") {
    BlockDecomposition d = block_decompose(z2_swap_system());
    CHECK(detects_ideals(d));
    CHECK(hidden_ideal(d) == 0);
    CHECK(separates_ideals(d));
  }
  SUBCASE("every ideal with empty res sits inside the hidden ideal") {
    for (SystemPtr sys : {z2_point_system(), z2_fixed_system(), two_orbit_system()}) {
      BlockDecomposition d = block_decompose(sys);
      IdealMask hid = hidden_ideal(d);
      for (IdealMask j : ideal_lattice(d))
        if (res(d, j).empty()) CHECK((j & ~hid) == 0);
      CHECK(detects_ideals(d) == (hid == 0));
    }
  }
  SUBCASE("under freeness the hidden ideal itself has empty res") {
    for (SystemPtr sys : {z2_swap_system(), two_orbit_system()}) {
      BlockDecomposition d = block_decompose(sys);
      IdealMask hid = hidden_ideal(d);
      if (hid != 0) CHECK(res(d, hid).empty());
    }
  }
  SUBCASE("separation fails at the fixed point") {
    BlockDecomposition d = block_decompose(z2_fixed_system());
    CHECK(!separates_ideals(d));
  }
}

namespace {

// mn_twist(2) exponents spread constantly over x; valid for any action since
// the cocycle is invariant under every pullback
Cocycle constant_mn2_twist(int points) {
  Cocycle base = mn_twist_cocycle(2);
  std::vector<int> e(static_cast<std::size_t>(4) * 4 * points);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int x = 0; x < points; ++x)
        e[(static_cast<std::size_t>(s) * 4 + t) * points + x] = base.exponent(s, t, 0);
  return Cocycle::exact(4, points, 2, std::move(e));
}

}  // namespace

TEST_CASE("a twisted bundle over a trivial action: one matrix block per point") {
  SystemPtr sys = make_system(trivial_action(make_product_of_cyclics({2, 2}), 2),
                              constant_mn2_twist(2), "m2bundle");
  BlockDecomposition d = block_decompose(sys);
  CHECK(dims_of(d) == std::multiset<int>{2, 2});
  // each fiber block meets C(X) in the indicator of its point
  CHECK(detects_ideals(d));
  CHECK(!is_free(sys->action));
  // the whole-group detection does not contradict the theorem: some cyclic
  // restriction unwinds the twist and fails
  TwistedDetectionVerdict tv = verify_twisted_detection_theorem(sys);
  CHECK(!tv.all_detect);
  CHECK(tv.consistent);
  SimplicityVerdict sv = verify_simplicity_theorem(sys);
  CHECK(!sv.untwisted);
  CHECK(!sv.is_simple);  // two blocks
  CHECK(sv.consistent);
  LatticeIsoVerdict lv = verify_lattice_isomorphism(sys);
  CHECK(lv.consistent);
}

TEST_CASE("a twisted system with a nontrivial action stays verdict-consistent") {
  FiniteAction a;
  a.group = make_product_of_cyclics({2, 2});
  a.points = 2;
  a.perms = {{0, 1}, {1, 0}, {0, 1}, {1, 0}};  // (0,1) swaps, (1,0) fixes
  SystemPtr sys = make_system(a, constant_mn2_twist(2), "twisted-swap");
  BlockDecomposition d = block_decompose(sys);
  int total = 0;
  for (int di : d.block_dims) total += di * di;
  CHECK(total == 8);
  CHECK(verify_simplicity_theorem(sys).consistent);
  CHECK(verify_twisted_detection_theorem(sys).consistent);
  CHECK(verify_lattice_isomorphism(sys).consistent);
  CHECK(!galois_check(d).has_value());
}

TEST_CASE("for untwisted systems detection is freeness") {
  FiniteAction z3rot;
  z3rot.group = make_cyclic(3);
  z3rot.points = 3;
  z3rot.perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  SystemPtr rot = make_system(z3rot, Cocycle::trivial(3, 3), "z3rot");
  SystemPtr triv =
      make_system(trivial_action(make_cyclic(1), 2), Cocycle::trivial(1, 2), "pt2");
  for (SystemPtr sys :
       {z2_swap_system(), z2_fixed_system(), z2_point_system(), two_orbit_system(),
        rot, triv})
    CHECK(detects_ideals(block_decompose(sys)) == is_free(sys->action));
}

TEST_CASE("prime space and the quasi-orbit map") {
  SUBCASE("simple algebra: one prime, one quasi-orbit") {
    BlockDecomposition d = block_decompose(make_mn_twist(2));
    auto primes = prime_space(d);
    REQUIRE(primes.size() == 1);
    CHECK(primes[0] == 0);
    QuasiOrbitReport q = quasi_orbit_map_check(d);
    CHECK(q.bijection);
    CHECK(q.consistent);
  }
  SUBCASE("free action with two orbits: 2 primes onto 2 quasi-orbits") {
    BlockDecomposition d = block_decompose(two_orbit_system());
    CHECK(prime_space(d).size() == 2);
    QuasiOrbitReport q = quasi_orbit_map_check(d);
    CHECK(q.bijection);
    CHECK(q.expected_bijection);
    CHECK(q.consistent);
  }
  SUBCASE("fixed point: 3 primes vs 2 quasi-orbits") {
    BlockDecomposition d = block_decompose(z2_fixed_system());
    CHECK(prime_space(d).size() == 3);
    QuasiOrbitReport q = quasi_orbit_map_check(d);
    CHECK(!q.bijection);
    CHECK(!q.expected_bijection);
    CHECK(q.consistent);
  }
}

TEST_CASE("simplicity theorem verdicts") {
  SUBCASE("free minimal untwisted: simple") {
    SimplicityVerdict v = verify_simplicity_theorem(z2_swap_system());
    CHECK(v.untwisted);
    CHECK(v.is_free);
    CHECK(v.is_minimal);
    CHECK(v.is_simple);
    CHECK(v.consistent);
  }
  SUBCASE("trivial Z2 on a point: minimal but not free, not simple") {
    SimplicityVerdict v = verify_simplicity_theorem(z2_point_system());
    CHECK(!v.is_free);
    CHECK(v.is_minimal);
    CHECK(!v.is_simple);
    CHECK(v.consistent);
  }
  SUBCASE("mn_twist(2): twisted branch") {
    SimplicityVerdict v = verify_simplicity_theorem(make_mn_twist(2));
    CHECK(!v.untwisted);
    CHECK(!v.is_free);
    CHECK(v.is_minimal);
    CHECK(v.detects);
    CHECK(v.is_simple);
    CHECK(v.consistent);
  }
}

TEST_CASE("twisted detection theorem verdicts") {
  SUBCASE("free actions detect along every cyclic subgroup") {
    TwistedDetectionVerdict v = verify_twisted_detection_theorem(z2_swap_system());
    CHECK(v.is_free);
    CHECK(v.all_detect);
    CHECK(v.consistent);
  }
  SUBCASE("a fixed point breaks detection in some cyclic restriction") {
    TwistedDetectionVerdict v = verify_twisted_detection_theorem(z2_fixed_system());
    CHECK(!v.is_free);
    CHECK(!v.all_detect);
    CHECK(v.consistent);
  }
  SUBCASE("the trivial group is vacuously consistent") {
    SystemPtr sys =
        make_system(trivial_action(make_cyclic(1), 2), Cocycle::trivial(1, 2), "triv");
    TwistedDetectionVerdict v = verify_twisted_detection_theorem(sys);
    CHECK(v.is_free);
    CHECK(v.all_detect);
    CHECK(v.consistent);
  }
  SUBCASE("mn_twist: not free, and some cyclic restriction fails to detect") {
    TwistedDetectionVerdict v = verify_twisted_detection_theorem(make_mn_twist(2));
    CHECK(!v.is_free);
    CHECK(!v.all_detect);
    CHECK(v.consistent);
  }
}

TEST_CASE("lattice isomorphism verdicts") {
  SUBCASE("free swap: 2 invariant sets onto 2 ideals") {
    LatticeIsoVerdict v = verify_lattice_isomorphism(z2_swap_system());
    CHECK(v.residually_free);
    CHECK(v.invariant_count == 2);
    CHECK(v.ideal_count == 2);
    CHECK(v.lattice_isomorphism);
    CHECK(v.consistent);
  }
  SUBCASE("two free orbits: 4 onto 4") {
    LatticeIsoVerdict v = verify_lattice_isomorphism(two_orbit_system());
    CHECK(v.invariant_count == 4);
    CHECK(v.ideal_count == 4);
    CHECK(v.lattice_isomorphism);
    CHECK(v.consistent);
  }
  SUBCASE("fixed point: 8 ideals vs 4 invariant sets, separation fails") {
    LatticeIsoVerdict v = verify_lattice_isomorphism(z2_fixed_system());
    CHECK(!v.residually_free);
    CHECK(v.invariant_count == 4);
    CHECK(v.ideal_count == 8);
    CHECK(!v.separates);
    CHECK(v.consistent);
  }
  SUBCASE("twisted simple systems may separate without freeness") {
    LatticeIsoVerdict v = verify_lattice_isomorphism(make_mn_twist(2));
    CHECK(!v.residually_free);
    CHECK(!v.untwisted);
    CHECK(v.separates);
    CHECK(v.consistent);
  }
}
