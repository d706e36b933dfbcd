#include "csiso/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace csiso::oracle
{

namespace
{

using Table = std::vector<std::vector<Element>>;

CayleyGroup from_rule(std::size_t n, std::string name, auto &&mul)
{
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<Element>(mul(a, b));
  CayleyGroup g(t, std::move(name));
  g.validate_associativity();
  return g;
}

std::vector<char> closure(CayleyGroup const &g, std::vector<Element> seeds)
{
  std::vector<char> in(g.order(), 0);
  std::vector<Element> list{0};
  in[0] = 1;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Element s : seeds) {
      Element y = g.mul(list[i], s);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  return in;
}

std::size_t order_of(CayleyGroup const &g, Element x)
{
  std::size_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x))
    ++k;
  return k;
}

std::vector<Element> small_generators(CayleyGroup const &g)
{
  std::vector<Element> by_order(g.order());
  for (Element x = 0; x < g.order(); ++x)
    by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) {
    return order_of(g, a) > order_of(g, b);
  });
  std::vector<Element> gens;
  std::vector<char> in = closure(g, gens);
  for (Element x : by_order)
    if (!in[x]) {
      gens.push_back(x);
      in = closure(g, gens);
    }
  return gens;
}

// Homomorphism on <gens> sending gens[j] to imgs[j], if consistent.
std::optional<std::vector<std::int64_t>>
extend(CayleyGroup const &g1, CayleyGroup const &g2,
       std::vector<Element> const &gens, std::vector<Element> const &imgs)
{
  std::vector<std::int64_t> phi(g1.order(), -1);
  std::vector<Element> list{0};
  phi[0] = 0;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Element y = g1.mul(list[i], gens[j]);
      auto v = static_cast<std::int64_t>(
        g2.mul(static_cast<Element>(phi[list[i]]), imgs[j]));
      if (phi[y] < 0) {
        phi[y] = v;
        list.push_back(y);
      } else if (phi[y] != v) {
        return std::nullopt;
      }
    }
  std::vector<char> used(g2.order(), 0);
  for (auto v : phi)
    if (v >= 0) {
      if (used[v])
        return std::nullopt;
      used[v] = 1;
    }
  return phi;
}

std::vector<std::vector<Element>> all_homs_bijective(CayleyGroup const &g1,
                                                     CayleyGroup const &g2)
{
  std::vector<std::vector<Element>> res;
  if (g1.order() != g2.order())
    return res;
  auto gens = small_generators(g1);
  std::vector<std::size_t> ord1;
  for (Element x : gens)
    ord1.push_back(order_of(g1, x));
  std::vector<std::size_t> ord2(g2.order());
  for (Element y = 0; y < g2.order(); ++y)
    ord2[y] = order_of(g2, y);

  std::vector<Element> imgs;
  auto rec = [&](auto &&self) -> void {
    std::size_t j = imgs.size();
    if (j == gens.size()) {
      auto phi = extend(g1, g2, gens, imgs);
      if (!phi)
        return;
      std::vector<Element> m(phi->begin(), phi->end());
      res.push_back(std::move(m));
      return;
    }
    for (Element y = 0; y < g2.order(); ++y) {
      if (ord2[y] != ord1[j])
        continue;
      imgs.push_back(y);
      std::vector<Element> partial(gens.begin(), gens.begin() + j + 1);
      if (extend(g1, g2, partial, imgs))
        self(self);
      imgs.pop_back();
    }
  };
  rec(rec);
  std::sort(res.begin(), res.end());
  return res;
}

bool maps_series(std::vector<Element> const &phi, Series const &s1,
                 Series const &s2)
{
  if (s1.size() != s2.size())
    return false;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (s1[i].size() != s2[i].size())
      return false;
    std::vector<Element> img;
    for (Element x : s1[i])
      img.push_back(phi[x]);
    std::sort(img.begin(), img.end());
    std::vector<Element> target = s2[i];
    std::sort(target.begin(), target.end());
    if (img != target)
      return false;
  }
  return true;
}

using Mask = std::vector<char>;

std::vector<Mask> all_subgroups(CayleyGroup const &g)
{
  std::set<Mask> seen;
  std::vector<Mask> list{closure(g, {})};
  seen.insert(list.front());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element x = 0; x < g.order(); ++x) {
      if (list[i][x])
        continue;
      std::vector<Element> seeds{x};
      for (Element y = 0; y < g.order(); ++y)
        if (list[i][y])
          seeds.push_back(y);
      Mask m = closure(g, seeds);
      if (seen.insert(m).second)
        list.push_back(std::move(m));
    }
  }
  return list;
}

bool subset(Mask const &a, Mask const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i])
      return false;
  return true;
}

bool normal_in(CayleyGroup const &g, Mask const &n, Mask const &k)
{
  for (Element x = 0; x < g.order(); ++x) {
    if (!k[x])
      continue;
    for (Element h = 0; h < g.order(); ++h)
      if (n[h] && !n[g.conj(h, x)])
        return false;
  }
  return true;
}

std::vector<Element> to_list(Mask const &m)
{
  std::vector<Element> res;
  for (Element i = 0; i < m.size(); ++i)
    if (m[i])
      res.push_back(i);
  return res;
}

} // namespace

CayleyGroup cyclic(std::size_t n)
{
  return from_rule(n, "C" + std::to_string(n),
                   [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

CayleyGroup dihedral(std::size_t m)
{
  // a^i s^e  <->  2i + e ; s a = a^-1 s
  return from_rule(2 * m, "D" + std::to_string(m),
                   [m](std::size_t x, std::size_t y) {
                     std::size_t i = x / 2, e = x % 2, j = y / 2, f = y % 2;
                     std::size_t k = e ? (i + m - j) % m : (i + j) % m;
                     return 2 * k + (e ^ f);
                   });
}

CayleyGroup dicyclic(std::size_t m)
{
  // a^i x^e <-> 2i + e, a of order 2m, x^2 = a^m, x a = a^-1 x
  std::size_t const n = 2 * m;
  return from_rule(2 * n, "Dic" + std::to_string(m),
                   [m, n](std::size_t x, std::size_t y) {
                     std::size_t i = x / 2, e = x % 2, j = y / 2, f = y % 2;
                     if (!e)
                       return 2 * ((i + j) % n) + f;
                     std::size_t k = (i + n - j) % n;
                     if (f)
                       return 2 * ((k + m) % n);
                     return 2 * k + 1;
                   });
}

CayleyGroup semidirect_cyclic(std::size_t m, std::size_t k, std::size_t r)
{
  std::vector<std::size_t> pw(k);
  pw[0] = 1;
  for (std::size_t i = 1; i < k; ++i)
    pw[i] = pw[i - 1] * r % m;
  if (pw[k - 1] * r % m != 1)
    throw std::invalid_argument("semidirect_cyclic: r^k != 1 mod m");
  // x^b a^a <-> b*m + a, with x^-1 a x = a^r
  return from_rule(m * k, "C" + std::to_string(m) + ":C" + std::to_string(k),
                   [=](std::size_t x, std::size_t y) {
                     std::size_t a = x % m, b = x / m, c = y % m, d = y / m;
                     std::size_t na = (a * pw[d] + c) % m;
                     return ((b + d) % k) * m + na;
                   });
}

CayleyGroup product(CayleyGroup const &a, CayleyGroup const &b)
{
  std::size_t const nb = b.order();
  return from_rule(a.order() * nb, a.name() + "x" + b.name(),
                   [&](std::size_t x, std::size_t y) {
                     return a.mul(static_cast<Element>(x / nb),
                                  static_cast<Element>(y / nb)) * nb +
                            b.mul(static_cast<Element>(x % nb),
                                  static_cast<Element>(y % nb));
                   });
}

CayleyGroup elementary_abelian(std::size_t p, std::size_t k)
{
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i)
    n *= p;
  return from_rule(n, "C" + std::to_string(p) + "^" + std::to_string(k),
                   [p, k](std::size_t x, std::size_t y) {
                     std::size_t res = 0, w = 1;
                     for (std::size_t i = 0; i < k; ++i, x /= p, y /= p, w *= p)
                       res += ((x % p + y % p) % p) * w;
                     return res;
                   });
}

CayleyGroup from_permutations(std::vector<Perm> const &gens, std::string name)
{
  if (gens.empty())
    throw std::invalid_argument("from_permutations: no generators");
  std::vector<Perm> elts{Perm(gens.front().degree())};
  std::map<Perm, std::size_t> index{{elts.front(), 0}};
  for (std::size_t i = 0; i < elts.size(); ++i)
    for (auto const &s : gens) {
      Perm y = elts[i] * s;
      if (index.emplace(y, elts.size()).second)
        elts.push_back(std::move(y));
    }
  return from_rule(elts.size(), std::move(name),
                   [&](std::size_t a, std::size_t b) {
                     return index.at(elts[a] * elts[b]);
                   });
}

CayleyGroup relabel(CayleyGroup const &g, Perm const &sigma)
{
  if (sigma.degree() != g.order() || sigma[0] != 0)
    throw std::invalid_argument("relabel: sigma must fix 0");
  Perm inv = sigma.inverse();
  CayleyGroup res = from_rule(g.order(), g.name() + "'",
                              [&](std::size_t a, std::size_t b) {
                                return sigma[g.mul(inv[static_cast<Point>(a)],
                                                   inv[static_cast<Point>(b)])];
                              });
  return res;
}

std::vector<Entry> const &catalog()
{
  static std::vector<Entry> const cat = [] {
    std::vector<Entry> c;
    auto add = [&](std::string name, CayleyGroup g) {
      g.set_name(name);
      c.push_back({std::move(name), std::move(g)});
    };
    for (std::size_t n = 2; n <= 16; ++n)
      add("C" + std::to_string(n), cyclic(n));
    add("C2xC2", product(cyclic(2), cyclic(2)));
    add("C2xC4", product(cyclic(2), cyclic(4)));
    add("C2xC2xC2", product(product(cyclic(2), cyclic(2)), cyclic(2)));
    add("C3xC3", product(cyclic(3), cyclic(3)));
    add("S3", from_permutations({Perm{1, 2, 0}, Perm{1, 0, 2}}));
    add("D4", dihedral(4));
    add("Q8", dicyclic(2));
    add("D5", dihedral(5));
    add("D6", dihedral(6));
    add("A4", from_permutations({Perm{1, 2, 0, 3}, Perm{0, 2, 3, 1}}));
    add("Dic3", dicyclic(3));
    add("C3:C4", semidirect_cyclic(3, 4, 2));
    add("S4", from_permutations({Perm{1, 2, 3, 0}, Perm{1, 0, 2, 3}}));
    return c;
  }();
  return cat;
}

CayleyGroup const &catalog_group(std::string const &name)
{
  for (auto const &e : catalog())
    if (e.name == name)
      return e.group;
  throw std::out_of_range("no catalog group named " + name);
}

std::vector<Perm> all_automorphisms(CayleyGroup const &g)
{
  std::vector<Perm> res;
  for (auto &m : all_homs_bijective(g, g))
    res.emplace_back(std::vector<Point>(m.begin(), m.end()));
  return res;
}

std::vector<Perm> aut_fixing_series(CayleyGroup const &g, Series const &s)
{
  std::vector<Perm> res;
  for (auto &m : all_homs_bijective(g, g))
    if (maps_series(m, s, s))
      res.emplace_back(std::vector<Point>(m.begin(), m.end()));
  return res;
}

std::vector<GroupHom> all_isomorphisms(CayleyGroup const &g1,
                                       CayleyGroup const &g2)
{
  std::vector<GroupHom> res;
  for (auto &m : all_homs_bijective(g1, g2))
    res.push_back(GroupHom{std::move(m)});
  return res;
}

std::vector<GroupHom> iso_matching_series(CayleyGroup const &g1,
                                          Series const &s1,
                                          CayleyGroup const &g2,
                                          Series const &s2)
{
  std::vector<GroupHom> res;
  for (auto &m : all_homs_bijective(g1, g2))
    if (maps_series(m, s1, s2))
      res.push_back(GroupHom{std::move(m)});
  return res;
}

std::vector<Series> composition_series(CayleyGroup const &g)
{
  auto subs = all_subgroups(g);
  std::vector<Series> res;
  Series cur;
  auto rec = [&](auto &&self, Mask const &k) -> void {
    cur.push_back(to_list(k));
    if (cur.back().size() == 1) {
      res.push_back(cur);
      cur.pop_back();
      return;
    }
    std::vector<Mask const *> normals;
    for (auto const &n : subs)
      if (n != k && subset(n, k) && normal_in(g, n, k))
        normals.push_back(&n);
    for (auto const *n : normals) {
      bool maximal = std::none_of(normals.begin(), normals.end(),
                                  [&](Mask const *m) {
                                    return m != n && subset(*n, *m);
                                  });
      if (maximal)
        self(self, *n);
    }
    cur.pop_back();
  };
  rec(rec, Mask(g.order(), 1));
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<Perm> group_elements(std::size_t degree,
                                 std::vector<Perm> const &gens)
{
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> list{Perm(degree)};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto const &s : gens) {
      Perm y = list[i] * s;
      if (seen.insert(y).second)
        list.push_back(std::move(y));
    }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> brute_set_stabilizer(std::size_t degree,
                                       std::vector<Perm> const &gens,
                                       std::vector<Point> const &delta)
{
  std::vector<char> in(degree, 0);
  for (Point p : delta)
    in[p] = 1;
  std::vector<Perm> res;
  for (auto const &x : group_elements(degree, gens)) {
    bool ok = true;
    for (Point p : delta)
      ok = ok && in[x[p]];
    if (ok)
      res.push_back(x);
  }
  return res;
}

std::vector<PermFixture> const &perm_fixtures()
{
  static std::vector<PermFixture> const fx = [] {
    auto cyc = [](std::size_t d, std::vector<std::vector<Point>> c) {
      return Perm::from_cycles(d, c);
    };
    std::vector<PermFixture> f;
    f.push_back({"trivial4", 4, {Perm(4)}, true});
    f.push_back({"C4", 4, {cyc(4, {{0, 1, 2, 3}})}, true});
    f.push_back({"V4", 4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})},
                 true});
    f.push_back({"D4", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})}, true});
    f.push_back({"A4", 4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})}, true});
    f.push_back({"S4", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})}, true});
    f.push_back({"AGL(1,5)", 5, {cyc(5, {{0, 1, 2, 3, 4}}),
                                 cyc(5, {{1, 2, 4, 3}})}, true});
    f.push_back({"S3xS2", 5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}}),
                              cyc(5, {{3, 4}})}, true});
    f.push_back({"C3wrC2", 6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 3}, {1, 4}, {2, 5}})},
                 true});
    f.push_back({"S3wrC2", 6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}}),
                               cyc(6, {{0, 3}, {1, 4}, {2, 5}})}, true});
    f.push_back({"C2wrC3", 6, {cyc(6, {{0, 1}}), cyc(6, {{0, 2, 4}, {1, 3, 5}})},
                 true});
    f.push_back({"AGL(1,7)", 7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}),
                                 cyc(7, {{1, 3, 2, 6, 4, 5}})}, true});
    f.push_back({"C8", 8, {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}})}, true});
    f.push_back({"D8", 8, {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}),
                           cyc(8, {{1, 7}, {2, 6}, {3, 5}})}, true});
    f.push_back({"Q8reg", 8, {cyc(8, {{0, 2, 1, 3}, {4, 7, 5, 6}}),
                              cyc(8, {{0, 4, 1, 5}, {2, 6, 3, 7}})}, true});
    f.push_back({"C2wrC2wrC2", 8, {cyc(8, {{0, 1}}), cyc(8, {{0, 2}, {1, 3}}),
                                   cyc(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})},
                 true});
    // x -> x + 1 and x -> 2x over GF(8) = GF(2)[t]/(t^3+t+1), points as bit masks
    f.push_back({"AGL(1,8)", 8, {cyc(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
                                 cyc(8, {{1, 2, 4, 3, 6, 7, 5}})}, true});
    f.push_back({"S4xS2", 6, {cyc(6, {{0, 1, 2, 3}}), cyc(6, {{0, 1}}),
                              cyc(6, {{4, 5}})}, true});
    f.push_back({"A5", 5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})},
                 false});
    return f;
  }();
  return fx;
}

bool is_closed(std::vector<Perm> const &elements)
{
  std::set<Perm> s(elements.begin(), elements.end());
  for (auto const &a : elements) {
    if (!s.count(a.inverse()))
      return false;
    for (auto const &b : elements)
      if (!s.count(a * b))
        return false;
  }
  return true;
}

} // namespace csiso::oracle
