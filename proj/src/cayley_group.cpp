#include "csiso/cayley_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "csiso/error.hpp"

namespace csiso
{

CayleyGroup::CayleyGroup(std::vector<std::vector<Element>> const &table,
                         std::string name)
: order_(table.size()), name_(std::move(name))
{
  std::size_t const n = order_;
  if (n == 0)
    throw ValidationError("table: empty group");

  table_.resize(n * n);
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      std::ostringstream ss;
      ss << "table: row " << i << " has length " << table[i].size()
         << ", expected " << n;
      throw ValidationError(ss.str());
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      Element x = table[i][j];
      if (x >= n || seen[x]) {
        std::ostringstream ss;
        ss << "latin square: row " << i << " is not a permutation";
        throw ValidationError(ss.str());
      }
      seen[x] = 1;
      table_[i * n + j] = x;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      Element x = table_[i * n + j];
      if (seen[x]) {
        std::ostringstream ss;
        ss << "latin square: column " << j << " is not a permutation";
        throw ValidationError(ss.str());
      }
      seen[x] = 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table_[x] != x || table_[x * n] != x)
      throw ValidationError("identity: element 0 is not a two-sided identity");
  }

  inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table_[x * n + y] == 0) {
        inverse_[x] = static_cast<Element>(y);
        break;
      }
    }
    if (table_[inverse_[x] * n + x] != 0)
      throw ValidationError("inverse: left and right inverses differ");
  }
}

std::vector<std::vector<Element>> CayleyGroup::table() const
{
  std::vector<std::vector<Element>> res(order_);
  for (std::size_t i = 0; i < order_; ++i)
    res[i].assign(table_.begin() + i * order_, table_.begin() + (i + 1) * order_);
  return res;
}

void CayleyGroup::validate_associativity() const
{
  std::size_t const n = order_;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element ab = mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          std::ostringstream ss;
          ss << "associativity: (" << a << "*" << b << ")*" << c
             << " != " << a << "*(" << b << "*" << c << ")";
          throw ValidationError(ss.str());
        }
      }
    }
}

Element CayleyGroup::element_order(Element x) const
{
  Element k = 1;
  for (Element y = x; y != 0; y = mul(y, x))
    ++k;
  return k;
}

bool CayleyGroup::is_abelian() const
{
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

Subgroup::Subgroup(std::size_t parent_order, std::vector<Element> elements)
: elements_(std::move(elements)), mask_(parent_order, 0),
  pos_(parent_order, -1)
{
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= parent_order)
      throw ValidationError("subgroup: element index out of range");
    mask_[elements_[i]] = 1;
    pos_[elements_[i]] = static_cast<std::int64_t>(i);
  }
}

std::int64_t Subgroup::position(Element x) const
{
  return x < pos_.size() ? pos_[x] : -1;
}

bool Subgroup::is_subset_of(Subgroup const &other) const
{
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element x) { return other.contains(x); });
}

bool is_homomorphism(CayleyGroup const &dom, CayleyGroup const &cod,
                     GroupHom const &hom)
{
  if (hom.image.size() != dom.order() || hom.image[0] != 0)
    return false;
  for (Element x : hom.image)
    if (x >= cod.order())
      return false;
  for (Element a = 0; a < dom.order(); ++a)
    for (Element b = 0; b < dom.order(); ++b)
      if (hom.image[dom.mul(a, b)] != cod.mul(hom.image[a], hom.image[b]))
        return false;
  return true;
}

Subgroup whole_group(CayleyGroup const &g)
{
  std::vector<Element> all(g.order());
  for (Element i = 0; i < g.order(); ++i)
    all[i] = i;
  return Subgroup(g.order(), std::move(all));
}

Subgroup trivial_subgroup(CayleyGroup const &g)
{
  return Subgroup(g.order(), {0});
}

namespace
{

void check_range(CayleyGroup const &g, std::span<Element const> xs)
{
  for (Element x : xs)
    if (x >= g.order())
      throw ValidationError("element index out of range");
}

std::vector<Element> closure(CayleyGroup const &g, std::span<Element const> seeds,
                             std::vector<char> &in)
{
  std::vector<Element> elems{0};
  in.assign(g.order(), 0);
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : seeds) {
      Element y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return elems;
}

} // namespace

Subgroup subgroup_generated(CayleyGroup const &g,
                            std::span<Element const> seeds)
{
  check_range(g, seeds);
  std::vector<char> in;
  return Subgroup(g.order(), closure(g, seeds, in));
}

Subgroup normal_closure(CayleyGroup const &g, std::span<Element const> seeds)
{
  check_range(g, seeds);
  auto const conj_gens = generating_set(g);
  std::vector<Element> gens(seeds.begin(), seeds.end());
  std::vector<char> in;
  std::vector<Element> elems = closure(g, gens, in);
  for (;;) {
    bool grown = false;
    std::size_t const ngens = gens.size();
    for (std::size_t i = 0; i < ngens; ++i) {
      for (Element x : conj_gens) {
        Element c = g.conj(gens[i], x);
        if (!in[c]) {
          gens.push_back(c);
          elems = closure(g, gens, in);
          grown = true;
        }
      }
    }
    if (!grown)
      break;
  }
  return Subgroup(g.order(), std::move(elems));
}

Subgroup centralizer(CayleyGroup const &g, Subgroup const &h)
{
  require_subgroup(g, h);
  auto gens = generating_set(g, h);
  std::vector<Element> res;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](Element y) {
      return g.mul(x, y) == g.mul(y, x);
    });
    if (ok)
      res.push_back(x);
  }
  return Subgroup(g.order(), std::move(res));
}

Subgroup center(CayleyGroup const &g, Subgroup const &h)
{
  auto gens = generating_set(g, h);
  std::vector<Element> res;
  for (Element x : h.elements()) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](Element y) {
      return g.mul(x, y) == g.mul(y, x);
    });
    if (ok)
      res.push_back(x);
  }
  return Subgroup(g.order(), std::move(res));
}

Subgroup join(CayleyGroup const &g, Subgroup const &a, Subgroup const &b)
{
  auto seeds = generating_set(g, a);
  auto sb = generating_set(g, b);
  seeds.insert(seeds.end(), sb.begin(), sb.end());
  return subgroup_generated(g, seeds);
}

Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  std::vector<Element> res;
  for (Element x : a.elements())
    if (b.contains(x))
      res.push_back(x);
  return Subgroup(a.parent_order(), std::move(res));
}

Subgroup product(CayleyGroup const &g, Subgroup const &a, Subgroup const &b)
{
  std::vector<char> in(g.order(), 0);
  std::vector<Element> res;
  for (Element x : a.elements())
    for (Element y : b.elements()) {
      Element z = g.mul(x, y);
      if (!in[z]) {
        in[z] = 1;
        res.push_back(z);
      }
    }
  return Subgroup(g.order(), std::move(res));
}

bool is_subgroup(CayleyGroup const &g, Subgroup const &h)
{
  if (h.parent_order() != g.order() || !h.contains(0))
    return false;
  if (g.order() % h.order() != 0)
    return false;
  for (Element x : h.elements()) {
    if (!h.contains(g.inv(x)))
      return false;
    for (Element y : h.elements())
      if (!h.contains(g.mul(x, y)))
        return false;
  }
  return true;
}

bool is_normal(CayleyGroup const &g, Subgroup const &h)
{
  auto gens = generating_set(g);
  for (Element x : gens)
    for (Element y : h.elements())
      if (!h.contains(g.conj(y, x)))
        return false;
  return true;
}

void require_subgroup(CayleyGroup const &g, Subgroup const &h)
{
  if (!is_subgroup(g, h))
    throw ValidationError("subgroup: element set is not a subgroup");
}

void require_normal(CayleyGroup const &g, Subgroup const &h)
{
  require_subgroup(g, h);
  if (!is_normal(g, h))
    throw ValidationError("normality: subgroup is not normal");
}

Perm inn_restriction(CayleyGroup const &g, Subgroup const &h, Element x)
{
  auto const &elems = h.elements();
  std::vector<Point> img(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto p = h.position(g.conj(elems[i], x));
    if (p < 0)
      throw ValidationError("inn_restriction: element does not normalize H");
    img[i] = static_cast<Point>(p);
  }
  return Perm(std::move(img));
}

CosetPartition cosets(CayleyGroup const &g, Subgroup const &h)
{
  CosetPartition res;
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  res.coset_of.assign(g.order(), unset);
  for (Element x = 0; x < g.order(); ++x) {
    if (res.coset_of[x] != unset)
      continue;
    auto idx = static_cast<std::uint32_t>(res.blocks.size());
    std::vector<Element> block;
    for (Element y : h.elements()) {
      Element z = g.mul(y, x);
      res.coset_of[z] = idx;
      block.push_back(z);
    }
    std::sort(block.begin(), block.end());
    res.blocks.push_back(std::move(block));
  }
  return res;
}

Quotient quotient(CayleyGroup const &g, Subgroup const &h)
{
  require_normal(g, h);
  auto cs = cosets(g, h);
  std::size_t const k = cs.count();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = cs.coset_of[g.mul(cs.rep(i), cs.rep(j))];
  GroupHom proj{cs.coset_of};
  std::string name = g.name().empty() ? "" : g.name() + "/N";
  return Quotient{CayleyGroup(table, name), std::move(proj), std::move(cs)};
}

DirectProduct direct_product(CayleyGroup const &g1, CayleyGroup const &g2)
{
  std::size_t const n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[a][b] = static_cast<Element>(
        g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2));

  DirectProduct res{CayleyGroup(table, g1.name() + "x" + g2.name()), {}, {},
                    {}, {}, n2};
  std::vector<Element> f1, f2;
  for (Element a = 0; a < n1; ++a) {
    res.embed1.image.push_back(static_cast<Element>(a * n2));
    f1.push_back(static_cast<Element>(a * n2));
  }
  for (Element b = 0; b < n2; ++b) {
    res.embed2.image.push_back(b);
    f2.push_back(b);
  }
  res.factor1 = Subgroup(n, std::move(f1));
  res.factor2 = Subgroup(n, std::move(f2));
  return res;
}

CayleyGroup induced_group(CayleyGroup const &g, Subgroup const &h)
{
  auto const &elems = h.elements();
  std::vector<std::vector<Element>> table(elems.size(),
                                          std::vector<Element>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto p = h.position(g.mul(elems[i], elems[j]));
      if (p < 0)
        throw ValidationError("subgroup: not closed under the product");
      table[i][j] = static_cast<Element>(p);
    }
  return CayleyGroup(table);
}

std::vector<Element> generating_set(CayleyGroup const &g, Subgroup const &h)
{
  std::vector<Element> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::size_t have = 1;
  // Prefer elements of large order; ties by index.
  std::vector<Element> cand(h.elements().begin(), h.elements().end());
  std::vector<Element> ord(g.order(), 0);
  for (Element x : cand)
    ord[x] = g.element_order(x);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Element a, Element b) { return ord[a] > ord[b]; });
  for (Element x : cand) {
    if (have == h.order())
      break;
    if (in[x])
      continue;
    gens.push_back(x);
    auto elems = closure(g, gens, in);
    have = elems.size();
  }
  return gens;
}

std::vector<Element> generating_set(CayleyGroup const &g)
{
  return generating_set(g, whole_group(g));
}

namespace
{

// One representative (the minimum) per conjugacy class.
std::vector<Element> class_representatives(CayleyGroup const &g)
{
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    reps.push_back(x);
    for (Element y = 0; y < g.order(); ++y)
      seen[g.conj(x, y)] = 1;
  }
  return reps;
}

} // namespace

std::vector<Subgroup> minimal_normal_subgroups(CayleyGroup const &g)
{
  std::vector<Subgroup> closures;
  for (Element x : class_representatives(g)) {
    if (x == 0)
      continue;
    Element seed[] = {x};
    auto n = normal_closure(g, seed);
    if (std::find(closures.begin(), closures.end(), n) == closures.end())
      closures.push_back(std::move(n));
  }
  std::vector<Subgroup> res;
  for (auto const &a : closures) {
    bool minimal = std::none_of(closures.begin(), closures.end(),
                                [&](Subgroup const &b) {
                                  return b.order() < a.order() &&
                                         b.is_subset_of(a);
                                });
    if (minimal)
      res.push_back(a);
  }
  std::sort(res.begin(), res.end(), [](Subgroup const &a, Subgroup const &b) {
    return a.elements() < b.elements();
  });
  return res;
}

std::vector<Subgroup> normal_subgroups(CayleyGroup const &g)
{
  auto const reps = class_representatives(g);
  std::vector<Subgroup> res{trivial_subgroup(g)};
  std::set<std::vector<Element>> seen{res[0].elements()};
  for (std::size_t i = 0; i < res.size(); ++i) {
    for (Element x : reps) {
      if (res[i].contains(x))
        continue;
      auto seeds = generating_set(g, res[i]);
      seeds.push_back(x);
      auto n = normal_closure(g, seeds);
      if (seen.insert(n.elements()).second)
        res.push_back(std::move(n));
    }
  }
  std::sort(res.begin(), res.end(), [](Subgroup const &a, Subgroup const &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return res;
}

bool is_simple(CayleyGroup const &g)
{
  if (g.order() == 1)
    return false;
  auto mins = minimal_normal_subgroups(g);
  return mins.size() == 1 && mins[0].order() == g.order();
}

std::optional<std::vector<Subgroup>>
characteristically_simple_decomposition(CayleyGroup const &g)
{
  if (g.order() == 1)
    return std::nullopt;
  auto mins = minimal_normal_subgroups(g);
  std::size_t const factor_order = mins.front().order();
  bool const abelian = induced_group(g, mins.front()).is_abelian();
  std::vector<Subgroup> picked;
  Subgroup prod = trivial_subgroup(g);
  for (auto const &m : mins) {
    if (m.order() != factor_order)
      return std::nullopt;
    auto mg = induced_group(g, m);
    if (mg.is_abelian() != abelian || !is_simple(mg))
      return std::nullopt;
    if (intersection(prod, m).order() == 1) {
      prod = product(g, prod, m);
      picked.push_back(m);
    }
  }
  if (prod.order() != g.order())
    return std::nullopt;
  return picked;
}

bool is_characteristically_simple(CayleyGroup const &g)
{
  return characteristically_simple_decomposition(g).has_value();
}

bool is_automorphism(CayleyGroup const &g, Perm const &p)
{
  if (p.degree() != g.order() || p[0] != 0)
    return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (p[g.mul(a, b)] != g.mul(p[a], p[b]))
        return false;
  return true;
}

} // namespace csiso
