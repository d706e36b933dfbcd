#include "csiso/small_aut.hpp"

#include <algorithm>
#include <optional>

namespace csiso
{

namespace
{

// Extends gens[j] -> imgs[j] along the Cayley graph; nullopt on a clash or a
// collision.
std::optional<std::vector<Element>>
extend_images(CayleyGroup const &g, std::vector<Element> const &gens,
              std::vector<Element> const &imgs, std::size_t count)
{
  constexpr auto unset = static_cast<Element>(-1);
  std::vector<Element> phi(g.order(), unset);
  std::vector<char> hit(g.order(), 0);
  std::vector<Element> queue{0};
  phi[0] = 0;
  hit[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t j = 0; j < count; ++j) {
      Element y = g.mul(x, gens[j]);
      Element v = g.mul(phi[x], imgs[j]);
      if (phi[y] == unset) {
        if (hit[v])
          return std::nullopt;
        phi[y] = v;
        hit[v] = 1;
        queue.push_back(y);
      } else if (phi[y] != v) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

PermGroup with_rule_witness(PermGroup g)
{
  return is_solvable(g) ? g.with_self_witness() : g.with_trivial_witness();
}

} // namespace

std::vector<Perm> list_automorphisms(CayleyGroup const &g)
{
  auto gens = generating_set(g);
  std::vector<Element> imgs;
  std::vector<Perm> res;
  auto rec = [&](auto &&self) -> void {
    std::size_t const j = imgs.size();
    if (j == gens.size()) {
      auto phi = extend_images(g, gens, imgs, j);
      res.emplace_back(std::vector<Point>(phi->begin(), phi->end()));
      return;
    }
    auto const want = g.element_order(gens[j]);
    for (Element y = 0; y < g.order(); ++y) {
      if (g.element_order(y) != want)
        continue;
      imgs.push_back(y);
      if (extend_images(g, gens, imgs, j + 1))
        self(self);
      imgs.pop_back();
    }
  };
  if (gens.empty())
    return {Perm(g.order())};
  rec(rec);
  std::sort(res.begin(), res.end());
  return res;
}

PermGroup group_from_elements(std::size_t degree,
                              std::vector<Perm> const &elements)
{
  PermGroup g(degree);
  std::vector<Perm> gens;
  for (auto const &x : elements) {
    if (BigInt(elements.size()) == g.order())
      break;
    if (!g.contains(x)) {
      gens.push_back(x);
      g = PermGroup(degree, gens);
    }
  }
  return with_rule_witness(std::move(g));
}

PermGroup automorphism_group(CayleyGroup const &g)
{
  return group_from_elements(g.order(), list_automorphisms(g));
}

bool is_solvable(CayleyGroup const &g, Subgroup const &h)
{
  Subgroup cur = h;
  while (cur.order() > 1) {
    std::vector<Element> comms;
    auto const gens = generating_set(g, cur);
    for (Element a : gens)
      for (Element b : gens)
        comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    // Normal closure inside cur.
    std::vector<Element> seeds = comms;
    Subgroup d = subgroup_generated(g, seeds);
    for (bool grown = true; grown;) {
      grown = false;
      for (Element x : gens)
        for (Element y : std::vector<Element>(d.elements())) {
          Element c = g.conj(y, x);
          if (!d.contains(c)) {
            seeds.push_back(c);
            d = subgroup_generated(g, seeds);
            grown = true;
          }
        }
    }
    if (d.order() == cur.order())
      return false;
    cur = std::move(d);
  }
  return true;
}

} // namespace csiso
