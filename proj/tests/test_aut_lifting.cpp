#include "doctest.h"

#include <random>

#include "csiso/aut_lifting.hpp"
#include "csiso/error.hpp"
#include "csiso/oracle.hpp"
#include "csiso/small_aut.hpp"

using namespace csiso;
using oracle::catalog_group;

namespace
{

Subgroup gen(CayleyGroup const &g, std::vector<Element> seeds)
{
  return subgroup_generated(g, seeds);
}

Element of_order(CayleyGroup const &g, std::size_t k, std::size_t skip = 0)
{
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k && skip-- == 0)
      return x;
  throw std::logic_error("no element of that order");
}

PermGroup trivial_on(std::size_t d) { return PermGroup(d).with_self_witness(); }

// Brute force: automorphisms fixing H with Theta image in A x B.
std::vector<Perm> expected(SectionContext const &ctx, PermGroup const &a,
                           PermGroup const &b)
{
  std::vector<Perm> res;
  for (auto const &x : oracle::all_automorphisms(ctx.g)) {
    bool fixes = true;
    for (Element h : ctx.h.elements())
      fixes = fixes && ctx.h.contains(x[h]);
    if (!fixes)
      continue;
    auto p = theta(ctx, x);
    if (a.contains(p.alpha) && b.contains(p.beta))
      res.push_back(x);
  }
  return res;
}

void check_equal(PermGroup const &got, std::vector<Perm> const &want)
{
  REQUIRE(got.order() == want.size());
  for (auto const &x : want)
    CHECK(got.contains(x));
}

} // namespace

TEST_CASE("section context")
{
  auto const &s3 = catalog_group("S3");
  auto a3 = gen(s3, {of_order(s3, 3)});
  auto ctx = build_context(s3, a3);
  CHECK(ctx.c == a3);
  CHECK(ctx.hc == a3);
  CHECK(ctx.cosets_hc.count() == 2);
  CHECK(ctx.q.order() == 2);

  auto const &q8 = catalog_group("Q8");
  auto z = center(q8, whole_group(q8));
  auto cz = build_context(q8, z);
  CHECK(cz.c.order() == 8);
  CHECK(cz.hc.order() == 8);
  for (auto const &p : cz.inn)
    CHECK(p.is_identity());

  auto cg = build_context(q8, whole_group(q8));
  CHECK(cg.q.order() == 1);
  CHECK(cg.c == z);

  Element t = of_order(s3, 2);
  CHECK_THROWS_AS(build_context(s3, gen(s3, {t})), ValidationError);
}

TEST_CASE("theta")
{
  auto const &s3 = catalog_group("S3");
  auto a3 = gen(s3, {of_order(s3, 3)});
  auto ctx = build_context(s3, a3);
  auto id = theta(ctx, Perm(6));
  CHECK(id.alpha.is_identity());
  CHECK(id.beta.is_identity());
  for (Element x = 0; x < 6; ++x) {
    std::vector<Point> img(6);
    for (Element y = 0; y < 6; ++y)
      img[y] = s3.conj(y, x);
    auto p = theta(ctx, Perm(img));
    CHECK(p.beta == ctx.inn[x]);
    if (a3.contains(x))
      CHECK(p.alpha.is_identity());
  }
  CHECK_THROWS_AS(theta(ctx, Perm::from_cycles(6, {{0, of_order(s3, 2)}})),
                  ValidationError);
}

TEST_CASE("kernel orders")
{
  auto const &c4 = catalog_group("C4");
  auto ctx = build_context(c4, gen(c4, {2}));
  CHECK(PermGroup(4, ker_L1_generators(ctx)).order() == 2);
  auto const &s3 = catalog_group("S3");
  auto cs = build_context(s3, gen(s3, {of_order(s3, 3)}));
  CHECK(PermGroup(6, ker_L1_generators(cs)).order() == 3);
  CHECK(ker_L1_generators(build_context(s3, whole_group(s3))).empty());

  auto q8c2 = oracle::product(catalog_group("Q8"), catalog_group("C2"));
  Subgroup q8(16, {0, 2, 4, 6, 8, 10, 12, 14});
  auto cq = build_context(q8c2, q8);
  CHECK(PermGroup(16, ker_L2_generators(cq)).order() == 2);
  CHECK(PermGroup(16, ker_L1_generators(cq)).order() == 8);

  for (auto const &g : ker_L1_generators(cs)) {
    auto p = theta(cs, g);
    CHECK(p.alpha.is_identity());
    CHECK(p.beta.is_identity());
  }
}

TEST_CASE("lifts round-trip and obey their laws")
{
  for (auto const &name : {"S3", "D4", "Q8", "A4", "Dic3", "C2xC4"}) {
    auto const &g = catalog_group(name);
    for (auto const &h : normal_subgroups(g)) {
      auto ctx = build_context(g, h);
      auto auts_q = list_automorphisms(ctx.q);
      auto auts_h = list_automorphisms(induced_group(g, h));
      for (auto const &alpha : auts_q)
        for (auto const &beta : auts_h) {
          AutPair pair{alpha, beta};
          Perm l1 = lift_L1(ctx, pair);
          auto back = theta(ctx, l1);
          REQUIRE(back.alpha == alpha);
          REQUIRE(back.beta == beta);
          REQUIRE(left_law(ctx, l1));
          if (l2_condition(ctx, pair)) {
            Perm l2 = lift_L2(ctx, pair);
            auto b2 = theta(ctx, l2);
            REQUIRE(b2.alpha == alpha);
            REQUIRE(b2.beta == beta);
            REQUIRE(two_sided_law(ctx, l2));
            for (Element x = 0; x < g.order(); ++x)
              for (Element y : h.elements())
                REQUIRE(l2[g.conj(y, x)] == g.conj(l2[y], l2[x]));
          } else {
            CHECK_THROWS_AS(lift_L2(ctx, pair), ContractError);
          }
        }
    }
  }
}

TEST_CASE("inversion on A3 inside S3")
{
  auto const &s3 = catalog_group("S3");
  auto ctx = build_context(s3, gen(s3, {of_order(s3, 3)}));
  Perm inv_beta(std::vector<Point>{0, 2, 1});
  AutPair p{Perm(2), inv_beta};
  Perm l1 = lift_L1(ctx, p);
  CHECK(left_law(ctx, l1));
  // Conjugation by an involution induces exactly this pair.
  CHECK(l2_condition(ctx, p));
  CHECK(two_sided_law(ctx, lift_L2(ctx, p)));
  CHECK(l2_condition(ctx, {Perm(2), Perm(3)}));
}

TEST_CASE("steps on small instances")
{
  auto const &s3 = catalog_group("S3");
  auto ctx = build_context(s3, gen(s3, {of_order(s3, 3)}));
  auto b = automorphism_group(induced_group(s3, ctx.h));
  CHECK(b.order() == 2);
  auto b2 = step2_normalize_inn(ctx, b, list_automorphisms(ctx.q_hc));
  CHECK(b2.order() == 2);
  CHECK(step2_normalize_inn(ctx, b, std::nullopt).order() == 2);
  auto a = trivial_on(2);
  auto m = step3_match(ctx, a, b2);
  CHECK(m.order() == 2);
  CHECK(step1_stabilize_HC(ctx, a).order() == 1);

  // Q = C2 x C2, HC/H a single nontrivial point.
  auto d4 = catalog_group("D4");
  auto z = center(d4, whole_group(d4));
  auto cd = build_context(d4, z);
  auto aq = automorphism_group(cd.q);
  CHECK(aq.order() == 6);
  auto s1 = step1_stabilize_HC(cd, aq);
  CHECK(s1.order() == 6);
  Element r = of_order(d4, 4);
  auto cr = build_context(d4, gen(d4, {r}));
  CHECK(cr.hc == cr.h);
}

TEST_CASE("autlifting examples")
{
  auto const &c4 = catalog_group("C4");
  auto ctx = build_context(c4, gen(c4, {2}));
  auto r = autlifting(ctx, trivial_on(2), trivial_on(2), Variant::L2);
  CHECK(r.order() == 2);
  CHECK(autlifting(ctx, trivial_on(2), trivial_on(2), Variant::L1).order() == 2);
  auto l1 = build_L1_hat(ctx, trivial_on(2), trivial_on(2));
  CHECK(l1.order() == 2);
  CHECK(step5_cut_to_aut(ctx, l1).order() == 2);

  auto const &s3 = catalog_group("S3");
  auto cs = build_context(s3, gen(s3, {of_order(s3, 3)}));
  auto bs = automorphism_group(induced_group(s3, cs.h));
  CHECK(autlifting(cs, trivial_on(2), bs, Variant::L2).order() == 6);
  CHECK(autlifting(cs, trivial_on(2), bs, Variant::L1).order() == 6);
  CHECK(build_L1_hat(cs, trivial_on(2), bs).order() == 6);

  auto const &v = catalog_group("C2xC2");
  auto cv = build_context(v, gen(v, {2}));
  CHECK(autlifting(cv, trivial_on(2), trivial_on(2), Variant::L2).order() == 2);
}

TEST_CASE("autlifting matches brute force with full pair groups")
{
  for (auto const &e : oracle::catalog()) {
    if (e.group.order() > 12 && e.name != "C16" && e.name != "S4")
      continue;
    for (auto const &h : normal_subgroups(e.group)) {
      CAPTURE(e.name);
      CAPTURE(h.order());
      auto ctx = build_context(e.group, h);
      auto a = automorphism_group(ctx.q);
      auto b = automorphism_group(induced_group(e.group, h));
      auto want = expected(ctx, a, b);
      auto r2 = autlifting(ctx, a, b, Variant::L2);
      check_equal(r2, want);
      for (auto const &x : r2.generators())
        CHECK(is_automorphism(e.group, x));
      if (is_solvable(e.group, h)) {
        auto r1 = autlifting(ctx, a, b, Variant::L1);
        CHECK(r1 == r2);
      }
    }
  }
}

TEST_CASE("autlifting with proper pair subgroups")
{
  std::mt19937 rng(7);
  for (auto const &name : {"D4", "Q8", "A4", "C2xC2xC2", "D6", "C2xC4"}) {
    auto const &g = catalog_group(name);
    for (auto const &h : normal_subgroups(g)) {
      CAPTURE(name);
      CAPTURE(h.order());
      auto ctx = build_context(g, h);
      auto aq = list_automorphisms(ctx.q);
      auto ah = list_automorphisms(induced_group(g, h));
      std::vector<Perm> ag{aq[rng() % aq.size()]}, bg{ah[rng() % ah.size()]};
      auto a = PermGroup(ctx.q.order(), ag).with_trivial_witness();
      auto b = PermGroup(h.order(), bg).with_trivial_witness();
      auto want = expected(ctx, a, b);
      check_equal(autlifting(ctx, a, b, Variant::L2), want);
      check_equal(autlifting(ctx, a, b, Variant::L1), want);
    }
  }
}
