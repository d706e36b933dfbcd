#include "csiso/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "csiso/error.hpp"
#include "csiso/set_stabilizer.hpp"
#include "csiso/small_aut.hpp"

namespace csiso
{

namespace
{

// `sub` as a subgroup of the induced group on `in`.
Subgroup positions_in(Subgroup const &sub, Subgroup const &in)
{
  std::vector<Element> pos;
  for (Element x : sub.elements()) {
    auto p = in.position(x);
    if (p < 0)
      throw ValidationError("series term is not contained in its predecessor");
    pos.push_back(static_cast<Element>(p));
  }
  return Subgroup(in.order(), std::move(pos));
}

bool normal_inside(CayleyGroup const &g, Subgroup const &n, Subgroup const &k)
{
  for (Element x : k.elements())
    for (Element h : n.elements())
      if (!n.contains(g.conj(h, x)))
        return false;
  return true;
}

std::size_t smallest_prime(std::size_t n)
{
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return p;
  return n;
}

void check_cap(std::size_t order, char const *what)
{
  if (order > max_order())
    throw ContractError(std::string(what) + ": order " + std::to_string(order) +
                        " exceeds CSISO_MAX_ORDER=" +
                        std::to_string(max_order()));
}

void verify_output(SeriesSpec const &spec, PermGroup const &res)
{
  for (auto const &x : res.generators())
    if (!is_automorphism(spec.group, x) || !fixes_series(spec, x))
      throw ContractError("solver produced a generator that is not a "
                          "series-preserving automorphism");
}

// p'[c] = phi^-1(p(phi(c))).
Perm pull_back(Perm const &p, std::vector<Point> const &phi,
               std::vector<Point> const &phi_inv)
{
  std::vector<Point> img(phi.size());
  for (std::size_t c = 0; c < phi.size(); ++c)
    img[c] = phi_inv[p[phi[c]]];
  return Perm(std::move(img));
}

PermGroup pull_back(PermGroup const &g, std::vector<Point> const &phi)
{
  std::vector<Point> phi_inv(phi.size());
  for (std::size_t c = 0; c < phi.size(); ++c)
    phi_inv[phi[c]] = static_cast<Point>(c);
  auto map_all = [&](std::vector<Perm> const &gens) {
    std::vector<Perm> res;
    for (auto const &x : gens)
      res.push_back(pull_back(x, phi, phi_inv));
    return res;
  };
  PermGroup res(phi.size(), map_all(g.generators()));
  if (!g.has_witness())
    return res;
  return res.with_witness(SolvableWitness{
    std::make_shared<PermGroup const>(
      PermGroup(phi.size(), map_all(g.witness()->subgroup_gens()))),
    g.witness()->index_bound});
}

// Automorphisms of an elementary abelian group fixing a full flag
// hg = V_0 > V_1 > ... > V_k = 1: diagonal scalings and e_j -> e_j + e_{j+1}
// in a basis adapted to the flag.
PermGroup flag_automorphisms(CayleyGroup const &hg,
                             std::vector<Subgroup> const &flag)
{
  std::size_t const n = hg.order();
  std::size_t const k = flag.size() - 1;
  if (k == 0)
    return PermGroup(n).with_self_witness();
  std::size_t const p = smallest_prime(n);
  std::vector<Element> basis;
  for (std::size_t j = 1; j <= k; ++j)
    for (Element x : flag[j - 1].elements())
      if (!flag[j].contains(x)) {
        basis.push_back(x);
        break;
      }

  // coords[x] = exponent vector of x in the basis.
  std::vector<std::vector<std::size_t>> coords(n);
  std::vector<std::size_t> c(k, 0);
  std::map<std::vector<std::size_t>, Element> element_of;
  for (std::size_t idx = 0; idx < n; ++idx) {
    Element x = 0;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < c[j]; ++t)
        x = hg.mul(x, basis[j]);
    coords[x] = c;
    element_of[c] = x;
    for (std::size_t j = 0; j < k && ++c[j] == p; ++j)
      c[j] = 0;
  }

  std::size_t omega = 1;
  for (std::size_t w = 2; w < p; ++w) {
    std::size_t ord = 1;
    for (std::size_t v = w; v != 1; v = v * w % p)
      ++ord;
    if (ord == p - 1) {
      omega = w;
      break;
    }
  }

  // Linear map given by basis images (as exponent vectors).
  auto realize = [&](std::vector<std::vector<std::size_t>> const &img) {
    std::vector<Point> perm(n);
    for (Element x = 0; x < n; ++x) {
      std::vector<std::size_t> y(k, 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          y[l] = (y[l] + coords[x][j] * img[j][l]) % p;
      perm[x] = element_of.at(y);
    }
    return Perm(std::move(perm));
  };
  auto identity_images = [&] {
    std::vector<std::vector<std::size_t>> img(k, std::vector<std::size_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j)
      img[j][j] = 1;
    return img;
  };

  std::vector<Perm> gens;
  if (omega != 1)
    for (std::size_t j = 0; j < k; ++j) {
      auto img = identity_images();
      img[j][j] = omega;
      gens.push_back(realize(img));
    }
  for (std::size_t j = 0; j + 1 < k; ++j) {
    auto img = identity_images();
    img[j][j + 1] = 1;
    gens.push_back(realize(img));
  }
  return PermGroup(n, std::move(gens)).with_self_witness();
}

// Direct product of the automorphism groups of the simple factors of a
// nonabelian characteristically simple group.
PermGroup factorwise_automorphisms(CayleyGroup const &hg)
{
  auto dec = characteristically_simple_decomposition(hg);
  if (!dec)
    throw ContractError("section is not characteristically simple");
  std::size_t const s = dec->size(), n = hg.order();
  // tuple of factor positions -> element, and back
  std::vector<std::vector<std::size_t>> parts(n);
  std::vector<std::size_t> t(s, 0);
  std::map<std::vector<std::size_t>, Element> element_of;
  for (std::size_t idx = 0; idx < n; ++idx) {
    Element x = 0;
    for (std::size_t j = 0; j < s; ++j)
      x = hg.mul(x, (*dec)[j].elements()[t[j]]);
    parts[x] = t;
    element_of[t] = x;
    for (std::size_t j = 0; j < s && ++t[j] == (*dec)[j].order(); ++j)
      t[j] = 0;
  }
  std::vector<Perm> gens;
  for (std::size_t j = 0; j < s; ++j) {
    auto fac = induced_group(hg, (*dec)[j]);
    for (auto const &phi : automorphism_group(fac).generators()) {
      std::vector<Point> img(n);
      for (Element x = 0; x < n; ++x) {
        auto u = parts[x];
        u[j] = phi[static_cast<Point>(u[j])];
        img[x] = element_of.at(u);
      }
      gens.emplace_back(std::move(img));
    }
  }
  PermGroup res(n, std::move(gens));
  return is_solvable(res) ? res.with_self_witness() : res.with_trivial_witness();
}

// One bottom-up lifting step from automorphisms b of `small` to those of
// `big`, with A restricted by `keep_alpha`.
template <class Keep>
PermGroup lift_level(CayleyGroup const &g, Subgroup const &big,
                     Subgroup const &small, PermGroup const &b, Keep &&keep_alpha,
                     Variant variant = Variant::L2)
{
  auto gi = induced_group(g, big);
  auto ctx = build_context(gi, positions_in(small, big));
  std::vector<Perm> alphas;
  for (auto const &a : list_automorphisms(ctx.q))
    if (keep_alpha(ctx, a))
      alphas.push_back(a);
  PermGroup a = group_from_elements(ctx.q.order(), alphas);
  return autlifting(ctx, a, b, variant);
}

// Kernel of a character chi: G -> C2 given on generators.
PermGroup character_kernel(PermGroup const &g, auto &&chi)
{
  auto restrict_gens = [&](std::vector<Perm> const &gens) -> std::optional<std::vector<Perm>> {
    auto it = std::find_if(gens.begin(), gens.end(), chi);
    if (it == gens.end())
      return std::nullopt;
    Perm const s = *it, si = it->inverse();
    std::vector<Perm> res;
    for (auto const &x : gens) {
      if (chi(x)) {
        res.push_back(x * si);
        res.push_back(s * x);
      } else {
        res.push_back(x);
        res.push_back(s * x * si);
      }
    }
    return res;
  };
  auto top = restrict_gens(g.generators());
  if (!top)
    return g;
  PermGroup res(g.degree(), *top);
  if (!g.has_witness())
    return res;
  auto const &w = *g.witness();
  auto low = restrict_gens(w.subgroup_gens());
  PermGroup rad = low ? PermGroup(g.degree(), *low) : *w.subgroup;
  return res.with_witness(SolvableWitness{
    std::make_shared<PermGroup const>(std::move(rad)), w.index_bound});
}

} // namespace

std::size_t max_order()
{
  if (char const *env = std::getenv("CSISO_MAX_ORDER")) {
    char *end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return 64;
}

SeriesReport validate_series(SeriesSpec const &spec)
{
  SeriesReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.composition = false;
    r.message = std::move(msg);
    return r;
  };
  auto const &g = spec.group;
  auto const &t = spec.terms;
  if (t.empty())
    return fail("series is empty");
  if (t.front().order() != g.order())
    return fail("first term is not the whole group");
  if (t.back().order() != 1)
    return fail("last term is not trivial");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].parent_order() != g.order())
      return fail("term " + std::to_string(i) + " has the wrong parent order");
    if (!is_subgroup(g, t[i]))
      return fail("term " + std::to_string(i) + " is not a subgroup");
  }
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (!t[i + 1].is_subset_of(t[i]) || t[i + 1].order() == t[i].order())
      return fail("term " + std::to_string(i + 1) +
                  " is not a proper subgroup of term " + std::to_string(i));
    if (!normal_inside(g, t[i + 1], t[i]))
      return fail("term " + std::to_string(i + 1) + " is not normal in term " +
                  std::to_string(i));
  }
  for (std::size_t i = 0; i + 1 < t.size() && r.composition; ++i) {
    auto gi = induced_group(g, t[i]);
    auto q = quotient(gi, positions_in(t[i + 1], t[i]));
    if (!is_simple(q.group)) {
      r.composition = false;
      r.message = "factor " + std::to_string(i) + " is not simple";
    }
  }
  return r;
}

void require_composition_series(SeriesSpec const &spec)
{
  auto r = validate_series(spec);
  if (!r.ok || !r.composition)
    throw ValidationError("invalid composition series: " + r.message);
}

bool fixes_series(SeriesSpec const &spec, Perm const &gamma)
{
  for (auto const &t : spec.terms)
    for (Element x : t.elements())
      if (!t.contains(gamma[x]))
        return false;
  return true;
}

CharSeries characteristic_series(CayleyGroup const &g)
{
  std::vector<Subgroup> up{trivial_subgroup(g)};
  std::vector<std::size_t> orders;
  std::vector<bool> abelian;
  while (up.back().order() < g.order()) {
    auto q = quotient(g, up.back());
    struct Typed
    {
      std::size_t order;
      bool abelian;
      Subgroup n;
    };
    std::vector<Typed> mins;
    for (auto &n : minimal_normal_subgroups(q.group)) {
      auto ng = induced_group(q.group, n);
      bool ab = ng.is_abelian();
      std::size_t ord = smallest_prime(n.order());
      if (!ab) {
        auto dec = characteristically_simple_decomposition(ng);
        if (!dec)
          throw ContractError("minimal normal subgroup is not "
                              "characteristically simple");
        ord = dec->front().order();
      }
      mins.push_back({ord, ab, std::move(n)});
    }
    auto best = std::min_element(mins.begin(), mins.end(),
                                 [](Typed const &a, Typed const &b) {
                                   return std::pair(a.order, !a.abelian) <
                                          std::pair(b.order, !b.abelian);
                                 });
    Subgroup m = trivial_subgroup(q.group);
    for (auto const &t : mins)
      if (t.order == best->order && t.abelian == best->abelian)
        m = join(q.group, m, t.n);
    std::vector<Element> pre;
    for (Element x = 0; x < g.order(); ++x)
      if (m.contains(q.cosets.coset_of[x]))
        pre.push_back(x);
    orders.push_back(best->order);
    abelian.push_back(best->abelian);
    up.emplace_back(g.order(), std::move(pre));
  }
  CharSeries cs;
  cs.terms.assign(up.rbegin(), up.rend());
  cs.factor_order.assign(orders.rbegin(), orders.rend());
  cs.abelian.assign(abelian.rbegin(), abelian.rend());
  return cs;
}

Refinement characteristic_refinement(SeriesSpec const &spec)
{
  require_composition_series(spec);
  auto const &g = spec.group;
  Refinement r;
  r.chars = characteristic_series(g);
  auto const &k = r.chars.terms;
  r.refined.group = g;
  r.refined.terms.push_back(k.front());
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    r.char_index.push_back(r.refined.terms.size() - 1);
    for (auto const &gj : spec.terms) {
      Subgroup t = product(g, intersection(k[i], gj), k[i + 1]);
      if (!(t == r.refined.terms.back()))
        r.refined.terms.push_back(std::move(t));
    }
  }
  r.char_index.push_back(r.refined.terms.size() - 1);
  auto rep = validate_series(r.refined);
  if (!rep.ok || !rep.composition)
    throw ContractError("characteristic refinement is not a composition "
                        "series: " + rep.message);
  return r;
}

PermGroup bottom_up_auto(SeriesSpec const &spec, Engine engine)
{
  Variant const variant = engine == Engine::L1 ? Variant::L1 : Variant::L2;
  require_composition_series(spec);
  check_cap(spec.group.order(), "bottom_up_auto");
  auto const &t = spec.terms;
  PermGroup cur = PermGroup(1).with_self_witness();
  for (std::size_t i = t.size() - 1; i >= 1; --i)
    cur = lift_level(spec.group, t[i - 1], t[i], cur,
                     [](SectionContext const &, Perm const &) { return true; },
                     variant);
  verify_output(spec, cur);
  return cur;
}

PermGroup top_down_auto(SeriesSpec const &spec, Engine engine)
{
  check_cap(spec.group.order(), "top_down_auto");
  auto ref = characteristic_refinement(spec);
  auto const &g = spec.group;
  auto const &k = ref.chars.terms;
  auto const &rt = ref.refined.terms;

  PermGroup s = PermGroup(1).with_self_witness();
  Quotient prev = quotient(g, k.front());
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    Quotient next = quotient(g, k[i + 1]);
    auto const &coset_of = next.cosets.coset_of;
    auto as_section = [&](Subgroup const &sub) {
      std::vector<Element> e;
      for (Element x : sub.elements())
        e.push_back(coset_of[x]);
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      return Subgroup(next.group.order(), std::move(e));
    };
    Subgroup hp = as_section(k[i]);
    auto ctx = build_context(next.group, hp);

    std::vector<Point> phi;
    for (std::size_t c = 0; c < ctx.cosets_h.count(); ++c)
      phi.push_back(prev.cosets.coset_of[next.cosets.rep(ctx.cosets_h.rep(c))]);
    PermGroup a = pull_back(s, phi);

    auto hg = induced_group(next.group, hp);
    PermGroup b;
    if (ref.chars.abelian[i]) {
      std::vector<Subgroup> flag;
      for (std::size_t j = ref.char_index[i]; j <= ref.char_index[i + 1]; ++j)
        flag.push_back(positions_in(as_section(rt[j]), hp));
      b = flag_automorphisms(hg, flag);
    } else {
      b = factorwise_automorphisms(hg);
    }
    bool const l1 = engine == Engine::L1 ||
                    (engine == Engine::Auto && ref.chars.abelian[i]);
    s = l1 ? autlifting(ctx, a, b, Variant::L1)
           : autlifting(ctx, a, b, Variant::L2, std::nullopt, Step2Mode::FilterB);
    prev = std::move(next);
  }
  for (std::size_t j = 1; j + 1 < spec.terms.size(); ++j) {
    auto const &e = spec.terms[j].elements();
    s = set_stabilizer(s, std::vector<Point>(e.begin(), e.end()));
  }
  verify_output(spec, s);
  return s;
}

IsoResult comp_series_iso(SeriesSpec const &spec1, SeriesSpec const &spec2)
{
  require_composition_series(spec1);
  require_composition_series(spec2);
  IsoResult no;
  auto const &g1 = spec1.group, &g2 = spec2.group;
  if (g1.order() != g2.order() || spec1.terms.size() != spec2.terms.size())
    return no;
  for (std::size_t i = 0; i < spec1.terms.size(); ++i)
    if (spec1.terms[i].order() != spec2.terms[i].order())
      return no;
  check_cap(g1.order() * g2.order(), "comp_series_iso");

  auto dp = direct_product(g1, g2);
  auto const &p = dp.group;
  std::size_t const m = spec1.terms.size() - 1;
  auto pair_set = [&](Subgroup const &a, Subgroup const &b) {
    std::vector<Element> e;
    for (Element x : a.elements())
      for (Element y : b.elements())
        e.push_back(dp.pair(x, y));
    return Subgroup(p.order(), std::move(e));
  };
  std::vector<Subgroup> pt;
  for (std::size_t i = 0; i <= m; ++i)
    pt.push_back(pair_set(spec1.terms[i], spec2.terms[i]));

  // Element of G_{1,i-1} outside G_{1,i}, paired with the identity.
  auto probe = [&](std::size_t i) {
    for (Element x : spec1.terms[i - 1].elements())
      if (!spec1.terms[i].contains(x))
        return dp.pair(x, 0);
    throw ContractError("series is not strictly decreasing");
  };
  // Does gamma (on positions of pt[j-1]... restricted to `big`) switch level i?
  auto switches = [&](Subgroup const &big, Perm const &gamma, std::size_t i) {
    Element img = big.elements()[gamma[static_cast<Point>(
      big.position(probe(i)))]];
    Element a = static_cast<Element>(img / dp.order2);
    Element b = static_cast<Element>(img % dp.order2);
    return !(spec1.terms[i - 1].contains(a) && spec2.terms[i].contains(b));
  };

  PermGroup cur = PermGroup(1).with_self_witness();
  for (std::size_t i = m; i >= 1; --i) {
    // F1, F2: images of G_{1,i-1} x G_{2,i} and G_{1,i} x G_{2,i-1} in Q.
    auto f1 = pair_set(spec1.terms[i - 1], spec2.terms[i]);
    auto f2 = pair_set(spec1.terms[i], spec2.terms[i - 1]);
    auto keep = [&](SectionContext const &ctx, Perm const &alpha) {
      auto image_of = [&](Subgroup const &f) {
        std::vector<std::uint32_t> c;
        for (Element x : f.elements())
          c.push_back(ctx.cosets_h.coset_of[pt[i - 1].position(x)]);
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        return c;
      };
      auto c1 = image_of(f1), c2 = image_of(f2);
      auto moved = [&](std::vector<std::uint32_t> const &c) {
        std::vector<std::uint32_t> r;
        for (auto x : c)
          r.push_back(alpha[x]);
        std::sort(r.begin(), r.end());
        return r;
      };
      auto m1 = moved(c1), m2 = moved(c2);
      return (m1 == c1 && m2 == c2) || (m1 == c2 && m2 == c1);
    };
    cur = lift_level(p, pt[i - 1], pt[i], cur, keep);
    if (i < m) {
      auto const &big = pt[i - 1];
      cur = character_kernel(cur, [&](Perm const &x) {
        return switches(big, x, i) != switches(big, x, i + 1);
      });
    }
    bool any = false;
    for (auto const &x : cur.generators())
      any = any || switches(pt[i - 1], x, i);
    if (!any)
      return no;
  }

  // cur acts on all of G1 x G2; take the lex-least switching element.
  auto const &big = pt[0];
  auto sw = [&](Perm const &x) { return switches(big, x, 1); };
  PermGroup even = character_kernel(cur, sw);
  auto const &gens = cur.generators();
  Perm s = *std::find_if(gens.begin(), gens.end(), sw);
  Perm best = even.lex_min_in_coset(s);

  IsoResult res;
  res.isomorphic = true;
  for (Element x = 0; x < g1.order(); ++x)
    res.iso.image.push_back(static_cast<Element>(best[dp.pair(x, 0)] % dp.order2));
  if (!is_homomorphism(g1, g2, res.iso))
    throw ContractError("extracted map is not a homomorphism");
  std::vector<char> hit(g2.order(), 0);
  for (Element y : res.iso.image)
    hit[y] = 1;
  if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(g2.order()))
    throw ContractError("extracted map is not bijective");
  for (std::size_t i = 0; i <= m; ++i)
    for (Element x : spec1.terms[i].elements())
      if (!spec2.terms[i].contains(res.iso.image[x]))
        throw ContractError("extracted map does not match the series");
  res.autgroup = bottom_up_auto(spec1);
  return res;
}

std::vector<SeriesSpec> enumerate_composition_series(CayleyGroup const &g,
                                                     std::size_t limit)
{
  std::vector<SeriesSpec> res;
  std::vector<Subgroup> chain{whole_group(g)};
  auto rec = [&](auto &&self) -> void {
    if (res.size() >= limit)
      return;
    Subgroup const k = chain.back();
    if (k.order() == 1) {
      res.push_back(SeriesSpec{g, chain});
      return;
    }
    auto kg = induced_group(g, k);
    auto ns = normal_subgroups(kg);
    std::vector<Subgroup> proper;
    for (auto const &n : ns)
      if (n.order() < kg.order())
        proper.push_back(n);
    for (auto const &n : proper) {
      bool maximal = std::none_of(proper.begin(), proper.end(),
                                  [&](Subgroup const &o) {
                                    return o.order() > n.order() &&
                                           n.is_subset_of(o);
                                  });
      if (!maximal)
        continue;
      std::vector<Element> e;
      for (Element x : n.elements())
        e.push_back(k.elements()[x]);
      chain.emplace_back(g.order(), std::move(e));
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return res;
}

IsoResult full_iso(CayleyGroup const &g1, CayleyGroup const &g2)
{
  if (g1.order() != g2.order())
    return {};
  auto s2 = enumerate_composition_series(g2, 1);
  for (auto const &s1 : enumerate_composition_series(g1)) {
    auto r = comp_series_iso(s1, s2.front());
    if (r.isomorphic)
      return r;
  }
  return {};
}

} // namespace csiso
