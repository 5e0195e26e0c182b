#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xprod/errors.hpp"
#include "xprod/group.hpp"

using namespace xprod;

TEST_CASE("cyclic(1) is the trivial group") {
  FiniteGroup g = make_cyclic(1);
  CHECK(g.order == 1);
  CHECK(g.table[0][0] == 0);
  CHECK(g.inv(0) == 0);
}

TEST_CASE("product_of_cyclics(2,2) uses lexicographic encoding") {
  FiniteGroup v4 = make_product_of_cyclics({2, 2});
  CHECK(v4.order == 4);
  CHECK(v4.table[1][2] == 3);
  CHECK(v4.table[1][1] == 0);
  CHECK(v4.table[2][2] == 0);
  CHECK(v4.table[3][3] == 0);
}

TEST_CASE("explicit table without inverses is rejected") {
  CHECK_THROWS_AS(make_group_from_table({{0, 1}, {1, 1}}), InvalidTable);
}

TEST_CASE("explicit table breaking associativity is rejected with a witness") {
  // identity + three involutions but not closed associatively
  std::vector<std::vector<int>> t = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CHECK_NOTHROW(make_group_from_table(t));  // this one is the Klein group
  t[1][2] = 2;
  t[1][3] = 3;  // no longer a latin square / associative
  CHECK_THROWS_AS(make_group_from_table(t), InvalidTable);
}

TEST_CASE("associativity holds on every preset") {
  for (const FiniteGroup& g :
       {make_cyclic(6), make_product_of_cyclics({2, 3}), make_symmetric(4)}) {
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

TEST_CASE("cyclic subgroup enumeration") {
  CHECK(cyclic_subgroups(make_cyclic(1)).size() == 1);

  auto z4 = cyclic_subgroups(make_cyclic(4));
  REQUIRE(z4.size() == 3);
  CHECK(z4[0].elements == std::vector<int>{0});
  CHECK(z4[1].elements == std::vector<int>{0, 2});
  CHECK(z4[2].elements == std::vector<int>{0, 1, 2, 3});

  auto v4 = cyclic_subgroups(make_product_of_cyclics({2, 2}));
  REQUIRE(v4.size() == 4);
  CHECK(v4[0].elements == std::vector<int>{0});
  for (int i = 1; i < 4; ++i) CHECK(v4[i].order() == 2);
}

TEST_CASE("all subgroups by closure search") {
  CHECK(all_subgroups(make_cyclic(3)).size() == 2);
  CHECK(all_subgroups(make_cyclic(1)).size() == 1);
  CHECK(all_subgroups(make_symmetric(3)).size() == 6);
  CHECK_THROWS_AS(all_subgroups(make_product_of_cyclics({5, 5})), OrderTooLarge);
}

TEST_CASE("Lagrange and containment of cyclic in all") {
  for (const FiniteGroup& g :
       {make_symmetric(3), make_cyclic(4), make_product_of_cyclics({2, 2})}) {
    auto all = all_subgroups(g);
    for (const Subgroup& h : all) {
      CHECK(g.order % h.order() == 0);
      CHECK(is_subgroup(g, h.elements));
    }
    auto cyc = cyclic_subgroups(g);
    for (const Subgroup& c : cyc) {
      bool found = false;
      for (const Subgroup& h : all)
        if (h.elements == c.elements) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("generating sets reproduce every element through their words") {
  for (const FiniteGroup& g :
       {make_symmetric(3), make_cyclic(4), make_product_of_cyclics({2, 2}),
        make_cyclic(1)}) {
    GeneratingSet gs = generating_set(g);
    for (int e = 0; e < g.order; ++e) {
      int acc = 0;
      for (int gi : gs.words[e]) acc = g.mul(acc, gs.generators[gi]);
      CHECK(acc == e);
    }
  }
}

TEST_CASE("element orders divide the group order") {
  FiniteGroup s4 = make_symmetric(4);
  for (int o : element_orders(s4)) CHECK(24 % o == 0);
}
