#include "doctest.h"

#include <algorithm>
#include <set>

#include "csiso/error.hpp"
#include "csiso/oracle.hpp"
#include "csiso/set_stabilizer.hpp"

using namespace csiso;

namespace
{

Perm cyc(std::size_t d, std::vector<std::vector<Point>> c)
{
  return Perm::from_cycles(d, c);
}

std::vector<Point> subset_of(std::size_t mask, std::size_t d)
{
  std::vector<Point> s;
  for (std::size_t i = 0; i < d; ++i)
    if (mask >> i & 1)
      s.push_back(static_cast<Point>(i));
  return s;
}

std::set<Point> image_set(Action const &act, Perm const &g,
                          std::vector<Point> const &pts)
{
  std::set<Point> s;
  for (Point p : pts)
    s.insert(act.image(g, p));
  return s;
}

PermGroup c4() { return PermGroup(4, {cyc(4, {{0, 1, 2, 3}})}); }

} // namespace

TEST_CASE("small set stabilizers")
{
  auto g = c4().with_self_witness();
  CHECK(set_stabilizer(g, std::vector<Point>{}).order() == 4);
  CHECK(set_stabilizer(g, std::vector<Point>{0, 1, 2, 3}).order() == 4);
  auto s = set_stabilizer(g, std::vector<Point>{0, 2});
  CHECK(s.order() == 2);
  CHECK(s.contains(cyc(4, {{0, 2}, {1, 3}})));
  CHECK(set_stabilizer(g, std::vector<Point>{0}).order() == 1);
  CHECK_THROWS_AS(set_stabilizer(c4(), std::vector<Point>{0}), ContractError);
}

TEST_CASE("coset recursion base cases")
{
  PermGroup triv(2);
  StabTask keep{GroupCoset(triv, Perm(2)), {0, 1}, {0}};
  CHECK_FALSE(stab_coset(keep).is_empty());
  StabTask lose{GroupCoset(triv, cyc(2, {{0, 1}})), {0}, {0}};
  CHECK(stab_coset(lose).is_empty());

  // Window = everything, so the coset part that fixes Delta setwise.
  StabTask t{GroupCoset(c4(), cyc(4, {{0, 1, 2, 3}})), {0, 2}, {0, 1, 2, 3}};
  auto x = stab_coset(t);
  REQUIRE_FALSE(x.is_empty());
  CHECK(x.size() == 2);
  CHECK(x.contains(Perm(4)));
  CHECK(x.contains(cyc(4, {{0, 2}, {1, 3}})));

  // Elements of the coset sending Delta onto Delta^a.
  NaturalAction nat(4);
  auto y = set_transporter(GroupCoset(c4().with_self_witness(),
                                      cyc(4, {{0, 1, 2, 3}})),
                           nat, {0, 2}, {1, 3});
  CHECK(y.size() == 2);
  CHECK(y.contains(cyc(4, {{0, 1, 2, 3}})));
  CHECK(y.contains(cyc(4, {{0, 3, 2, 1}})));

  // A window that is not all of the domain: only Delta n {2, 3} matters.
  PermGroup v(4, {cyc(4, {{2, 3}})});
  StabTask w{GroupCoset(v, cyc(4, {{0, 2}, {1, 3}})), {0, 3}, {2, 3}};
  auto z = stab_coset(w);
  // (Delta n Pi)^x = {3}^x must equal Delta n Pi^a = {0}.
  REQUIRE_FALSE(z.is_empty());
  CHECK(z.size() == 1);
  CHECK(z.contains(cyc(4, {{0, 2, 1, 3}})));
}

TEST_CASE("agrees with brute force on every subset of every fixture")
{
  for (auto const &f : oracle::perm_fixtures()) {
    CAPTURE(f.name);
    PermGroup g(f.degree, f.gens);
    g = f.solvable ? g.with_self_witness() : g.with_trivial_witness();
    for (std::size_t m = 0; m < (std::size_t{1} << f.degree); ++m) {
      auto delta = subset_of(m, f.degree);
      auto brute = oracle::brute_set_stabilizer(f.degree, f.gens, delta);
      auto s = set_stabilizer(g, delta);
      REQUIRE(s.order() == brute.size());
      for (auto const &x : brute)
        REQUIRE(s.contains(x));
      for (auto const &x : s.generators())
        REQUIRE(image_set(NaturalAction(f.degree), x, delta) ==
                std::set<Point>(delta.begin(), delta.end()));
      REQUIRE(s.has_witness());
      CHECK(s.witness()->subgroup->is_subgroup_of(s));
    }
  }
}

TEST_CASE("every recursion node returns the right coset")
{
  PermGroup g(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}}),
                  cyc(6, {{0, 3}, {1, 4}, {2, 5}})});
  g = g.with_self_witness();
  NaturalAction nat(6);
  std::vector<Point> delta{0, 1, 4};
  std::size_t nodes = 0;
  StabObserver check = [&](GroupCoset const &x, std::vector<Point> const &win,
                           GroupCoset const &res) {
    ++nodes;
    std::vector<Point> din, dout;
    for (Point p : win) {
      bool in = std::count(delta.begin(), delta.end(), p) > 0;
      if (in)
        din.push_back(p);
      if (std::count(delta.begin(), delta.end(), x.rep()[p]))
        dout.push_back(x.rep()[p]);
    }
    std::set<Point> want(dout.begin(), dout.end());
    std::size_t hits = 0;
    for (auto const &h : x.group().elements()) {
      Perm e = h * x.rep();
      bool ok = image_set(nat, e, din) == want;
      hits += ok;
      CHECK(ok == res.contains(e));
    }
    CHECK(res.size() == hits);
  };
  auto s = set_stabilizer(g, nat, delta, check);
  CHECK(nodes > 3);
  CHECK(s.order() == oracle::brute_set_stabilizer(6, g.generators(), delta).size());
}

TEST_CASE("set transporter")
{
  auto g = c4().with_self_witness();
  auto t = set_transporter(g, {0}, {2});
  REQUIRE_FALSE(t.is_empty());
  CHECK(t.size() == 1);
  CHECK(t.rep() == cyc(4, {{0, 2}, {1, 3}}));
  CHECK(set_transporter(g, {0}, {1, 2}).is_empty());
  auto same = set_transporter(g, {0, 2}, {0, 2});
  REQUIRE_FALSE(same.is_empty());
  CHECK(same.group() == set_stabilizer(g, std::vector<Point>{0, 2}));
  CHECK(same.contains(Perm(4)));

  PermGroup d4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
  d4 = d4.with_self_witness();
  CHECK(set_transporter(d4, {0, 2}, {0, 1}).is_empty());
  auto u = set_transporter(d4, {0, 1}, {1, 2});
  REQUIRE_FALSE(u.is_empty());
  CHECK(u.size() == 2);
}

TEST_CASE("transporters agree with brute force on fixtures")
{
  for (auto const &f : oracle::perm_fixtures()) {
    if (f.degree > 6 || !f.solvable)
      continue;
    CAPTURE(f.name);
    PermGroup g(f.degree, f.gens);
    g = f.solvable ? g.with_self_witness() : g.with_trivial_witness();
    auto elts = oracle::group_elements(f.degree, f.gens);
    NaturalAction nat(f.degree);
    std::size_t const full = std::size_t{1} << f.degree;
    for (std::size_t m = 0; m < full; m += 3) {
      for (std::size_t l = 0; l < full; l += 5) {
        auto delta = subset_of(m, f.degree), lambda = subset_of(l, f.degree);
        std::set<Point> want(lambda.begin(), lambda.end());
        std::size_t count = 0;
        for (auto const &x : elts)
          count += image_set(nat, x, delta) == want;
        auto t = set_transporter(g, delta, lambda);
        REQUIRE(t.size() == count);
        if (count)
          REQUIRE(image_set(nat, t.rep(), delta) == want);
      }
    }
  }
}

TEST_CASE("coset transporter")
{
  PermGroup d4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
  d4 = d4.with_self_witness();
  Perm x = cyc(4, {{0, 1}});
  NaturalAction nat(4);
  auto t = set_transporter(GroupCoset(d4, x), nat, {0, 2}, {0, 2});
  // (Gx)_Delta = G_{Delta -> Delta^(x^-1)} x
  auto direct = set_transporter(d4, {0, 2}, {1, 2});
  CHECK(t.size() == direct.size());
  for (auto const &g : d4.elements()) {
    Perm e = g * x;
    CHECK(t.contains(e) == (image_set(nat, e, {0, 2}) == std::set<Point>{0, 2}));
  }
}

TEST_CASE("intersection via the diagonal")
{
  PermGroup d4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
  PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  auto i = intersection_diagonal(d4.with_self_witness(), a4.with_self_witness());
  CHECK(i.order() == 4);
  REQUIRE(i.has_witness());
  CHECK(i.witness()->subgroup->is_subgroup_of(i));
  CHECK(i.witness()->index_bound == 1);
  auto j = intersection_diagonal(d4, a4.with_self_witness());
  CHECK(j.order() == 4);
  CHECK(j.witness()->index_bound == 8);
  CHECK_THROWS_AS(intersection_diagonal(d4, a4), ContractError);
}

TEST_CASE("tuple and pair actions")
{
  TupleAction t(3, 3);
  CHECK(t.size() == 27);
  Perm g = cyc(3, {{0, 1, 2}});
  CHECK(t.image(g, 0 * 9 + 1 * 3 + 2) == 1 * 9 + 2 * 3 + 0);
  PairAction p(2, 3);
  Perm h = concat(cyc(2, {{0, 1}}), cyc(3, {{0, 2}}));
  CHECK(p.image(h, 0 * 3 + 0) == 1 * 3 + 2);
}
