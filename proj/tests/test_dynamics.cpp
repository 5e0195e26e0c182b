#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "xprod/dynamics.hpp"
#include "xprod/errors.hpp"

using namespace xprod;

namespace {

FiniteAction z2_swap() {
  FiniteAction a;
  a.group = make_cyclic(2);
  a.points = 2;
  a.perms = {{0, 1}, {1, 0}};
  return a;
}

FiniteAction z2_fixed_point() {  // swap 0,1 and fix 2
  FiniteAction a;
  a.group = make_cyclic(2);
  a.points = 3;
  a.perms = {{0, 1, 2}, {1, 0, 2}};
  return a;
}

}  // namespace

TEST_CASE("homomorphism check accepts valid actions") {
  CHECK(!check_action(trivial_action(make_symmetric(3), 4)));
  CHECK(!check_action(z2_swap()));
}

TEST_CASE("Z4 with a 3-cycle on the generator is not an action") {
  FiniteAction a;
  a.group = make_cyclic(4);
  a.points = 3;
  std::vector<int> c = {1, 2, 0};
  std::vector<int> c2 = {2, 0, 1};
  std::vector<int> c3 = {0, 1, 2};  // c^3 = id, but g^3 != 1 in Z4
  a.perms = {{0, 1, 2}, c, c2, c3};
  auto w = check_action(a);
  REQUIRE(w.has_value());
  CHECK(a.perms[w->s][a.perms[w->t][w->x]] != a.perms[a.group.mul(w->s, w->t)][w->x]);
}

TEST_CASE("fixed points and freeness") {
  CHECK(fixed_points(z2_swap(), 1).empty());
  CHECK(is_free(z2_swap()));
  CHECK(fixed_points(z2_fixed_point(), 1) == std::vector<int>{2});
  CHECK(!is_free(z2_fixed_point()));
  CHECK(!is_free(trivial_action(make_cyclic(2), 1)));
}

TEST_CASE("orbits, minimality and the invariant lattice") {
  CHECK(orbits(z2_swap()) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(is_minimal(z2_swap()));
  CHECK(invariant_lattice(z2_swap()).members.size() == 2);

  auto orb = orbits(z2_fixed_point());
  CHECK(orb == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(invariant_lattice(z2_fixed_point()).members.size() == 4);

  FiniteAction t3 = trivial_action(make_cyclic(2), 3);
  CHECK(orbits(t3).size() == 3);
  CHECK(invariant_lattice(t3).members.size() == 8);
}

TEST_CASE("lattice size is 2^(orbit count) and minimality reads off the lattice") {
  for (const FiniteAction& a : {z2_swap(), z2_fixed_point(), trivial_action(make_cyclic(3), 4)}) {
    auto lat = invariant_lattice(a);
    CHECK(lat.members.size() == (std::size_t{1} << lat.orbits.size()));
    CHECK(is_minimal(a) == (lat.members.size() == 2));
  }
}

TEST_CASE("quasi-orbit space equals the orbit space on finite discrete X") {
  CHECK(quasi_orbit_space(z2_swap()).size() == 1);
  CHECK(quasi_orbit_space(z2_fixed_point()) ==
        std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(quasi_orbit_space(trivial_action(make_cyclic(2), 3)).size() == 3);
}

TEST_CASE("restriction to invariant sets") {
  FiniteAction r = restrict_action(z2_fixed_point(), {2});
  CHECK(r.points == 1);
  CHECK(!is_free(r));
  CHECK_THROWS_AS(restrict_action(z2_fixed_point(), {0}), NotInvariant);
}

TEST_CASE("residual freeness agrees with freeness on finite discrete spaces") {
  CHECK(is_residually_free(z2_swap()));
  CHECK(!is_residually_free(z2_fixed_point()));
  for (const FiniteAction& a :
       {z2_swap(), z2_fixed_point(), trivial_action(make_cyclic(4), 2),
        trivial_action(make_cyclic(1), 3)})
    CHECK(is_residually_free(a) == is_free(a));
}

TEST_CASE("exact means and their Hoelder splits") {
  SUBCASE("trivial group") {
    HolderSplit s = holder_split(exact_mean(make_cyclic(1), 1), 2.0);
    CHECK(s.g[0][0] == doctest::Approx(1.0));
    CHECK(verify_mean_identities(s, trivial_action(make_cyclic(1), 1)) ==
          doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("Z2 with p = 2") {
    HolderSplit s = holder_split(exact_mean(make_cyclic(2), 2), 2.0);
    CHECK(s.g[0][0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(s.h[1][1] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(verify_mean_identities(s, z2_swap()) <= 1e-12);
  }
  SUBCASE("Z3 with p = 3") {
    HolderSplit s = holder_split(exact_mean(make_cyclic(3), 1), 3.0);
    CHECK(s.g[0][0] == doctest::Approx(std::pow(3.0, -1.0 / 3.0)));
    CHECK(s.h[0][0] == doctest::Approx(std::pow(3.0, -2.0 / 3.0)));
    CHECK(verify_mean_identities(s, trivial_action(make_cyclic(3), 1)) <= 1e-12);
  }
  SUBCASE("bad exponent") {
    CHECK_THROWS_AS(holder_split(exact_mean(make_cyclic(2), 1), 1.0), BadExponent);
  }
  SUBCASE("identities hold across groups, actions and exponents") {
    FiniteAction s3nat;
    s3nat.group = make_symmetric(3);
    s3nat.points = 3;
    s3nat.perms.clear();
    // natural action: lex-ordered permutations act on {0,1,2}
    {
      std::vector<int> p = {0, 1, 2};
      do {
        s3nat.perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      // element g maps x to perms[g][x]; composition convention matches make_symmetric
    }
    REQUIRE(!check_action(s3nat));
    for (double p : {1.5, 2.0, 4.0}) {
      HolderSplit s = holder_split(exact_mean(s3nat.group, 3), p);
      CHECK(verify_mean_identities(s, s3nat) <= 1e-12);
    }
  }
}
