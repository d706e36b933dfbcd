#include "doctest.h"

#include "csiso/oracle.hpp"
#include "csiso/perm_group.hpp"

using namespace csiso;

namespace
{

Perm cyc(std::size_t d, std::vector<std::vector<Point>> c)
{
  return Perm::from_cycles(d, c);
}

} // namespace

TEST_CASE("orders and membership match enumeration")
{
  for (auto const &f : oracle::perm_fixtures()) {
    CAPTURE(f.name);
    PermGroup g(f.degree, f.gens);
    auto elts = oracle::group_elements(f.degree, f.gens);
    CHECK(g.order() == elts.size());
    for (auto const &x : elts)
      CHECK(g.contains(x));
    auto listed = g.elements();
    CHECK(listed.size() == elts.size());
    CHECK(listed.front().is_identity());
    std::sort(listed.begin(), listed.end());
    CHECK(listed == elts);
    CHECK(is_solvable(g) == f.solvable);
  }
  PermGroup c4(4, {cyc(4, {{0, 1, 2, 3}})});
  CHECK_FALSE(c4.contains(cyc(4, {{0, 1}})));
  CHECK(PermGroup(5).order() == 1);
  CHECK_THROWS_AS(PermGroup::from_generators({}), std::invalid_argument);
  CHECK_THROWS_AS(PermGroup(3, {Perm(4)}), std::invalid_argument);
}

TEST_CASE("orbits")
{
  PermGroup g(6, {cyc(6, {{0, 2}}), cyc(6, {{3, 4, 5}})});
  auto o = orbits(g);
  REQUIRE(o.size() == 3);
  CHECK(o[0] == std::vector<Point>{0, 2});
  CHECK(o[1] == std::vector<Point>{1});
  CHECK(o[2] == std::vector<Point>{3, 4, 5});
}

TEST_CASE("block systems")
{
  PermGroup d4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
  auto b = minimal_block_system(d4, {0, 1, 2, 3});
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::vector<Point>{0, 2});
  CHECK(b[1] == std::vector<Point>{1, 3});

  PermGroup s4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})});
  CHECK(minimal_block_system(s4, {0, 1, 2, 3}).size() == 4);

  PermGroup c8(8, {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  auto m = minimal_block_system(c8, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(m.size() == 4);
  CHECK(m[0] == std::vector<Point>{0, 4});
  NaturalAction nat(8);
  auto p = primitive_block_system(c8, nat, {0, 1, 2, 3, 4, 5, 6, 7});
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::vector<Point>{0, 2, 4, 6});

  PermGroup v(4, {cyc(4, {{0, 1}})});
  CHECK_THROWS_AS(minimal_block_system(v, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("action on blocks")
{
  PermGroup wr(8, {cyc(8, {{0, 1}}), cyc(8, {{0, 2}, {1, 3}}),
                   cyc(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})});
  std::vector<std::vector<Point>> blocks{{0, 1, 2, 3}, {4, 5, 6, 7}};
  auto r = action_on_blocks(wr, blocks);
  CHECK(r.image.order() == 2);
  CHECK(r.kernel.order() == 64);
  CHECK(r.transversal.size() == 2);
  CHECK(r.transversal[0].is_identity());
  CHECK(r.evaluate(cyc(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})) == cyc(2, {{0, 1}}));
  for (auto const &k : r.kernel.generators())
    CHECK(wr.contains(k));
}

TEST_CASE("derived series and solvability")
{
  PermGroup s4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})});
  auto d = derived_subgroup(s4);
  CHECK(d.order() == 12);
  CHECK(derived_subgroup(d).order() == 4);
  CHECK(is_solvable(s4));
  PermGroup s5(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})});
  CHECK_FALSE(is_solvable(s5));
  CHECK(normal_closure(s4, {cyc(4, {{0, 1}, {2, 3}})}).order() == 4);
}

TEST_CASE("transversals and lex-min coset elements")
{
  PermGroup s4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})});
  PermGroup d4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
  auto t = right_transversal(s4, d4);
  CHECK(t.size() == 3);
  CHECK(t[0].is_identity());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      CHECK_FALSE(d4.contains(t[i] * t[j].inverse()));

  Perm x = cyc(4, {{0, 1, 2}});
  Perm lm = d4.lex_min_in_coset(x);
  CHECK(d4.contains(lm * x.inverse()));
  for (auto const &g : d4.elements())
    CHECK(lm <= g * x);
}

TEST_CASE("direct products and witnesses")
{
  PermGroup a(3, {cyc(3, {{0, 1, 2}})});
  PermGroup b(2, {cyc(2, {{0, 1}})});
  auto p = direct_product(a.with_self_witness(), b.with_trivial_witness());
  CHECK(p.order() == 6);
  CHECK(p.degree() == 5);
  REQUIRE(p.has_witness());
  CHECK(p.witness()->index_bound == 2);
  CHECK(p.witness()->subgroup->order() == 3);
  auto [x, y] = split(concat(cyc(3, {{0, 1}}), cyc(2, {{0, 1}})), 3);
  CHECK(x == cyc(3, {{0, 1}}));
  CHECK(y == cyc(2, {{0, 1}}));

  GroupCoset c(a, cyc(3, {{0, 1}}));
  CHECK(c.contains(cyc(3, {{1, 2}})));
  CHECK_FALSE(c.contains(Perm(3)));
  CHECK(GroupCoset::empty().is_empty());
  CHECK(GroupCoset::empty().size() == 0);
}
