#include "doctest.h"

#include "csiso/cayley_group.hpp"
#include "csiso/error.hpp"
#include "csiso/oracle.hpp"

using namespace csiso;
using oracle::catalog_group;

TEST_CASE("table validation")
{
  CHECK_THROWS_AS(CayleyGroup({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(CayleyGroup({{1, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(CayleyGroup({{0, 1}, {1}}), ValidationError);
  CHECK_NOTHROW(CayleyGroup({{0, 1}, {1, 0}}));

  // Latin square with identity 0 that is not associative (order 5 loop).
  std::vector<std::vector<Element>> loop{{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}};
  CayleyGroup l(loop);
  CHECK_THROWS_AS(l.validate_associativity(), ValidationError);
}

TEST_CASE("subgroups and cosets")
{
  auto const &s3 = catalog_group("S3");
  auto a3 = subgroup_generated(s3, std::vector<Element>{1});
  auto gens = generating_set(s3);
  CHECK(subgroup_generated(s3, gens).order() == 6);
  CHECK(is_subgroup(s3, a3));
  CHECK(a3.order() == 3);
  CHECK(is_normal(s3, a3));
  auto c = cosets(s3, a3);
  CHECK(c.count() == 2);
  CHECK(c.blocks[0] == a3.elements());
  auto q = quotient(s3, a3);
  CHECK(q.group.order() == 2);
  CHECK(is_homomorphism(s3, q.group, q.projection));

  Element invol = 0;
  for (Element x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2)
      invol = x;
  auto t = subgroup_generated(s3, std::vector<Element>{invol});
  CHECK_FALSE(is_normal(s3, t));
  CHECK_THROWS_AS(require_normal(s3, t), ValidationError);
  CHECK(normal_closure(s3, std::vector<Element>{invol}).order() == 6);
  CHECK(centralizer(s3, a3) == a3);
  CHECK(center(s3, whole_group(s3)).order() == 1);
  CHECK(intersection(a3, t).order() == 1);
  CHECK(product(s3, a3, t).order() == 6);
  CHECK(join(s3, a3, t).order() == 6);
}

TEST_CASE("inner restriction")
{
  auto const &q8 = catalog_group("Q8");
  auto z = center(q8, whole_group(q8));
  CHECK(z.order() == 2);
  for (Element x = 0; x < 8; ++x)
    CHECK(inn_restriction(q8, z, x).is_identity());
  auto const &s3 = catalog_group("S3");
  auto a3 = subgroup_generated(s3, std::vector<Element>{1});
  int nontrivial = 0;
  for (Element x = 0; x < 6; ++x)
    nontrivial += !inn_restriction(s3, a3, x).is_identity();
  CHECK(nontrivial == 3);
}

TEST_CASE("normal structure")
{
  CHECK(normal_subgroups(catalog_group("S4")).size() == 4);
  CHECK(normal_subgroups(catalog_group("Q8")).size() == 6);
  CHECK(minimal_normal_subgroups(catalog_group("C6")).size() == 2);
  CHECK(minimal_normal_subgroups(catalog_group("C2xC2")).size() == 3);
  CHECK(is_simple(catalog_group("C7")));
  CHECK_FALSE(is_simple(catalog_group("A4")));
  CHECK(is_characteristically_simple(catalog_group("C3xC3")));
  CHECK(is_characteristically_simple(catalog_group("C2xC2xC2")));
  CHECK_FALSE(is_characteristically_simple(catalog_group("C6")));
  CHECK_FALSE(is_characteristically_simple(catalog_group("C4")));
  auto d = characteristically_simple_decomposition(catalog_group("C2xC2"));
  REQUIRE(d.has_value());
  CHECK(d->size() == 2);
}

TEST_CASE("direct products and induced groups")
{
  auto dp = direct_product(catalog_group("C2"), catalog_group("C3"));
  CHECK(dp.group.order() == 6);
  CHECK(dp.group.is_abelian());
  CHECK(dp.factor1.order() == 2);
  CHECK(dp.factor2.order() == 3);
  CHECK(is_homomorphism(catalog_group("C2"), dp.group, dp.embed1));
  auto const &s4 = catalog_group("S4");
  auto ns = normal_subgroups(s4);
  auto v4 = ns[1];
  CHECK(v4.order() == 4);
  auto ind = induced_group(s4, v4);
  CHECK(ind.order() == 4);
  CHECK(ind.is_abelian());
}

TEST_CASE("automorphism predicate")
{
  auto const &c5 = catalog_group("C5");
  CHECK(is_automorphism(c5, Perm{0, 2, 4, 1, 3}));
  CHECK_FALSE(is_automorphism(c5, Perm{0, 2, 1, 3, 4}));
}
