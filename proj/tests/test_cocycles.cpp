#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xprod/cocycle.hpp"
#include "xprod/errors.hpp"
#include "xprod/smith.hpp"

using namespace xprod;

namespace {

FiniteAction v4_swap() {
  // Z2 x Z2 on two points: (0,1) and (1,1) swap, (1,0) acts trivially
  FiniteAction a;
  a.group = make_product_of_cyclics({2, 2});
  a.points = 2;
  a.perms = {{0, 1}, {1, 0}, {0, 1}, {1, 0}};
  return a;
}

OneCochain random_exact_cochain(int n, int m, int modulus, std::mt19937_64& rng) {
  std::vector<int> e(static_cast<std::size_t>(n) * m);
  for (int& v : e) v = static_cast<int>(rng() % modulus);
  return OneCochain::exact(n, m, modulus, std::move(e));
}

// xi(1) = 1, so coboundaries of these stay normalised
OneCochain random_normalized_cochain(int n, int m, int modulus, std::mt19937_64& rng) {
  std::vector<int> e(static_cast<std::size_t>(n) * m, 0);
  for (int t = 1; t < n; ++t)
    for (int x = 0; x < m; ++x) e[t * m + x] = static_cast<int>(rng() % modulus);
  return OneCochain::exact(n, m, modulus, std::move(e));
}

}  // namespace

TEST_CASE("solve_mod handles solvable, unsolvable and composite cases") {
  // x + y = 1 (mod 2)
  auto s1 = solve_mod({{1, 1}}, {1}, 2);
  REQUIRE(s1.has_value());
  CHECK(((*s1)[0] + (*s1)[1]) % 2 == 1);
  // 2x = 1 (mod 4) has no solution, 2x = 2 (mod 4) does
  CHECK(!solve_mod({{2}}, {1}, 4).has_value());
  auto s2 = solve_mod({{2}}, {2}, 4);
  REQUIRE(s2.has_value());
  CHECK((2 * (*s2)[0]) % 4 == 2);
  // inconsistent pair
  CHECK(!solve_mod({{1, 0}, {1, 0}}, {0, 1}, 3).has_value());
}

TEST_CASE("smith_form diagonalises with unimodular transforms") {
  IntMatrix a = {{4, 6}, {6, 9}};
  SmithForm f = smith_form(a);
  // U a V must be diagonal with the stored diagonal
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) acc += f.u[i][k] * a[k][l] * f.v[l][j];
      CHECK(acc == (i == j ? f.diag[i] : 0));
    }
}

TEST_CASE("the trivial cocycle satisfies the identity") {
  FiniteAction a = v4_swap();
  CHECK(!check_cocycle_identity(Cocycle::trivial(4, 2), a));
}

TEST_CASE("mn_twist passes the identity and a flipped exponent fails it") {
  for (int n : {2, 3}) {
    FiniteAction a = trivial_action(make_product_of_cyclics({n, n}), 1);
    Cocycle u = mn_twist_cocycle(n);
    CHECK(!check_cocycle_identity(u, a));
  }
  // flip one exponent of mn_twist(2)
  FiniteAction a = trivial_action(make_product_of_cyclics({2, 2}), 1);
  std::vector<int> e(16);
  Cocycle u = mn_twist_cocycle(2);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) e[s * 4 + t] = u.exponent(s, t, 0);
  e[1 * 4 + 3] ^= 1;
  Cocycle bad = Cocycle::exact(4, 1, 2, std::move(e));
  CHECK(check_cocycle_identity(bad, a).has_value());
}

TEST_CASE("mn_twist values") {
  Cocycle u1 = mn_twist_cocycle(1);
  CHECK(u1.is_trivial());
  Cocycle u2 = mn_twist_cocycle(2);
  // u((0,1),(1,0)) = -1, i.e. exponent 1 mod 2; g=(0,1)->1, h=(1,0)->2
  CHECK(u2.exponent(1, 2, 0) == 1);
  CHECK(u2.exponent(0, 0, 0) == 0);
  CHECK(u2.value(1, 2, 0).real() == doctest::Approx(-1.0));
}

TEST_CASE("every coboundary is a cocycle") {
  FiniteAction a = v4_swap();
  SUBCASE("trivial cochain") {
    CHECK(coboundary(OneCochain::trivial(4, 2), a).is_trivial());
  }
  SUBCASE("random exact cochains, modulus 4") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      OneCochain xi = random_exact_cochain(4, 2, 4, rng);
      CHECK(!check_cocycle_identity(coboundary(xi, a), a));
    }
  }
  SUBCASE("complex cochains") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    std::vector<cplx> vals(8);
    for (cplx& v : vals) {
      double t = ang(rng);
      v = cplx{std::cos(t), std::sin(t)};
    }
    OneCochain xi = OneCochain::complex_valued(4, 2, vals);
    CHECK(!check_cocycle_identity(coboundary(xi, a), a));
  }
}

TEST_CASE("normalisation produces an equivalent normalised cocycle") {
  FiniteAction a = v4_swap();
  std::mt19937_64 rng(19);
  OneCochain xi0 = random_exact_cochain(4, 2, 4, rng);
  Cocycle u = coboundary(xi0, a);  // generally not normalised
  auto [nu, xi] = normalize(u, a);
  CHECK(nu.is_normalized());
  CHECK(!check_cocycle_identity(nu, a));
  // normalised cocycles have u(1,t) = u(t,1) = 1
  for (int t = 0; t < 4; ++t)
    for (int x = 0; x < 2; ++x) {
      CHECK(nu.value(0, t, x).real() == doctest::Approx(1.0));
      CHECK(nu.value(t, 0, x).real() == doctest::Approx(1.0));
    }
}

TEST_CASE("z1_check accepts 1-cocycles and rejects generic cochains") {
  FiniteAction a = v4_swap();
  CHECK(!z1_check(OneCochain::trivial(4, 2), a));
  // 1-coboundary omega(t) = a alpha_t(a^{-1})
  std::mt19937_64 rng(23);
  std::vector<int> ae(2);
  for (int& v : ae) v = static_cast<int>(rng() % 4);
  std::vector<int> we(8);
  for (int t = 0; t < 4; ++t)
    for (int x = 0; x < 2; ++x)
      we[t * 2 + x] = ae[x] - ae[a.apply_inv(t, x)];
  OneCochain omega = OneCochain::exact(4, 2, 4, std::move(we));
  CHECK(!z1_check(omega, a));
  // a generic random cochain fails
  bool some_failure = false;
  for (int trial = 0; trial < 10; ++trial)
    if (z1_check(random_exact_cochain(4, 2, 4, rng), a)) some_failure = true;
  CHECK(some_failure);
}

TEST_CASE("cohomologous solves constructed instances exactly") {
  FiniteAction a = v4_swap();
  std::mt19937_64 rng(31);
  Cocycle v = Cocycle::trivial(4, 2, 4);
  SUBCASE("u = v") {
    auto xi = cohomologous(v, v, a);
    REQUIRE(xi.has_value());
    CHECK(coboundary(*xi, a).is_trivial());
  }
  SUBCASE("u = d2(xi0) * v") {
    for (int trial = 0; trial < 10; ++trial) {
      OneCochain xi0 = random_normalized_cochain(4, 2, 4, rng);
      Cocycle u = mul(coboundary(xi0, a), v);
      CHECK(u.is_normalized());
      auto xi = cohomologous(u, v, a);
      REQUIRE(xi.has_value());
      Cocycle rebuilt = mul(coboundary(*xi, a), v);
      for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
          for (int x = 0; x < 2; ++x) CHECK(rebuilt.exponent(s, t, x) == u.exponent(s, t, x));
      // for normalised u and v the solution has xi(1) = 1
      for (int x = 0; x < 2; ++x) CHECK(xi->exponent(0, x) == 0);
    }
  }
}

TEST_CASE("cohomologous separates mn_twist from the trivial class") {
  for (int n : {2, 3}) {
    FiniteAction a = trivial_action(make_product_of_cyclics({n, n}), 1);
    auto xi = cohomologous(mn_twist_cocycle(n), Cocycle::trivial(n * n, 1, n), a);
    CHECK(!xi.has_value());
  }
}

TEST_CASE("cohomologous is an equivalence relation") {
  FiniteAction a = v4_swap();
  std::mt19937_64 rng(41);
  Cocycle v = Cocycle::trivial(4, 2, 4);
  OneCochain xi0 = random_exact_cochain(4, 2, 4, rng);
  OneCochain eta0 = random_exact_cochain(4, 2, 4, rng);
  Cocycle u = mul(coboundary(xi0, a), v);
  Cocycle w = mul(coboundary(eta0, a), u);
  // symmetry: a solution for (u,v) inverts to one for (v,u)
  auto xi = cohomologous(u, v, a);
  REQUIRE(xi.has_value());
  Cocycle back = mul(coboundary(xi->inverted(), a), u);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int x = 0; x < 2; ++x) CHECK(back.exponent(s, t, x) == v.exponent(s, t, x));
  // transitivity on the constructed triple (w ~ u ~ v)
  CHECK(cohomologous(w, u, a).has_value());
  CHECK(cohomologous(w, v, a).has_value());
}

TEST_CASE("cohomologous rejects wrong modes and moduli") {
  FiniteAction a = v4_swap();
  std::vector<cplx> ones(4 * 4 * 2, cplx{1.0, 0.0});
  Cocycle c = Cocycle::complex_valued(4, 2, ones);
  CHECK_THROWS_AS(cohomologous(c, Cocycle::trivial(4, 2, 4), a), ModeMismatch);
  CHECK_THROWS_AS(
      cohomologous(Cocycle::trivial(4, 2, 2), Cocycle::trivial(4, 2, 4), a),
      ModulusMismatch);
}

TEST_CASE("restrictions of valid cocycles stay valid") {
  FiniteAction a = v4_swap();
  std::mt19937_64 rng(53);
  Cocycle u = coboundary(random_exact_cochain(4, 2, 4, rng), a);
  // subgroup {0, 2} acts trivially here
  Cocycle uh = u.restricted_to_elements({0, 2});
  FiniteGroup z2 = make_cyclic(2);
  FiniteAction ah;
  ah.group = z2;
  ah.points = 2;
  ah.perms = {a.perms[0], a.perms[2]};
  CHECK(!check_cocycle_identity(uh, ah));
}
