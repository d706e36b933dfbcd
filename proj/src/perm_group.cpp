#include "csiso/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "csiso/detail/stab_chain.hpp"

namespace csiso
{

namespace detail
{

struct PermChain
{
  StabChain<Perm, PermOps> chain;
};

} // namespace detail

std::vector<Perm> const &SolvableWitness::subgroup_gens() const
{
  return subgroup->generators();
}

namespace
{

std::vector<Point> moved_points(std::size_t degree,
                                std::vector<Perm> const &gens)
{
  std::vector<char> moved(degree, 0);
  for (auto const &g : gens)
    for (std::size_t i = 0; i < degree; ++i)
      if (g[static_cast<Point>(i)] != i)
        moved[i] = 1;
  std::vector<Point> res;
  for (std::size_t i = 0; i < degree; ++i)
    if (moved[i])
      res.push_back(static_cast<Point>(i));
  return res;
}

} // namespace

PermGroup::PermGroup(std::size_t degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens)
: degree_(degree)
{
  for (auto &g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity() &&
        std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
  }
  auto chain = std::make_shared<detail::PermChain>(detail::PermChain{
    detail::StabChain<Perm, detail::PermOps>(
      degree, moved_points(degree, gens_), detail::PermOps{degree})});
  chain->chain.build(gens_, nullptr);
  order_ = chain->chain.order();
  chain_ = std::move(chain);
}

PermGroup PermGroup::from_generators(std::vector<Perm> gens)
{
  if (gens.empty())
    throw std::invalid_argument("from_generators: need at least one generator "
                                "to fix the degree");
  std::size_t d = gens.front().degree();
  return PermGroup(d, std::move(gens));
}

bool PermGroup::contains(Perm const &p) const
{
  if (p.degree() != degree_)
    return false;
  return sift(p).is_identity();
}

Perm PermGroup::sift(Perm const &p) const
{
  return chain_->chain.sift_from(p, 0).first;
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> res;
  for (auto const &lv : chain_->chain.levels())
    if (lv.orbit.size() > 1)
      res.push_back(lv.base);
  return res;
}

std::vector<Perm> PermGroup::strong_generators() const
{
  std::vector<Perm> res;
  for (auto const &lv : chain_->chain.levels())
    for (auto const &g : lv.gens)
      if (std::find(res.begin(), res.end(), g) == res.end())
        res.push_back(g);
  return res;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const
{
  std::vector<std::size_t> res;
  for (auto const &lv : chain_->chain.levels())
    if (lv.orbit.size() > 1)
      res.push_back(lv.orbit.size());
  return res;
}

std::vector<Perm> PermGroup::elements() const
{
  std::vector<Perm> res;
  chain_->chain.for_each_element([&](Perm const &g) { res.push_back(g); });
  return res;
}

Perm PermGroup::lex_min_in_coset(Perm const &rep) const
{
  Perm r = rep;
  for (auto const &lv : chain_->chain.levels()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < lv.orbit.size(); ++i)
      if (r[lv.orbit[i]] < r[lv.orbit[best]])
        best = i;
    r = lv.transversal[best] * r;
  }
  return r;
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (degree_ != other.degree_)
    return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](Perm const &g) { return other.contains(g); });
}

bool operator==(PermGroup const &a, PermGroup const &b)
{
  return a.degree_ == b.degree_ && a.order_ == b.order_ && a.is_subgroup_of(b);
}

PermGroup PermGroup::with_witness(SolvableWitness w) const
{
  PermGroup res = *this;
  res.witness_ = std::move(w);
  return res;
}

PermGroup PermGroup::with_self_witness() const
{
  PermGroup plain = *this;
  plain.witness_.reset();
  return with_witness(
    SolvableWitness{std::make_shared<PermGroup const>(std::move(plain)), 1});
}

PermGroup PermGroup::with_trivial_witness() const
{
  return with_witness(SolvableWitness{
    std::make_shared<PermGroup const>(PermGroup(degree_)), order_});
}

GroupCoset::GroupCoset(PermGroup group, Perm rep)
: group_(std::move(group)), rep_(std::move(rep))
{
  if (rep_.degree() != group_->degree())
    throw std::invalid_argument("coset representative degree mismatch");
}

bool GroupCoset::contains(Perm const &p) const
{
  if (is_empty() || p.degree() != rep_.degree())
    return false;
  return group_->contains(p * rep_.inverse());
}

std::vector<std::vector<Point>> orbits(PermGroup const &g, Action const &act,
                                       std::vector<Point> const &points)
{
  std::unordered_map<Point, char> seen;
  seen.reserve(points.size() * 2);
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Point>> res;
  for (Point p : sorted) {
    if (seen.count(p))
      continue;
    std::vector<Point> orb{p};
    seen[p] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (auto const &s : g.generators()) {
        Point q = act.image(s, orb[i]);
        if (seen.emplace(q, 1).second)
          orb.push_back(q);
      }
    std::sort(orb.begin(), orb.end());
    res.push_back(std::move(orb));
  }
  return res;
}

std::vector<std::vector<Point>> orbits(PermGroup const &g)
{
  std::vector<Point> all(g.degree());
  std::iota(all.begin(), all.end(), Point{0});
  return orbits(g, NaturalAction(g.degree()), all);
}

namespace
{

using GenImages = std::vector<std::vector<std::uint32_t>>;

// Generator images on the positions of a sorted g-stable point list.
GenImages local_images(PermGroup const &g, Action const &act,
                       std::vector<Point> const &pts)
{
  GenImages res;
  for (auto const &s : g.generators()) {
    std::vector<std::uint32_t> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Point q = act.image(s, pts[i]);
      auto it = std::lower_bound(pts.begin(), pts.end(), q);
      if (it == pts.end() || *it != q)
        throw std::invalid_argument("point set is not stable under the group");
      img[i] = static_cast<std::uint32_t>(it - pts.begin());
    }
    res.push_back(std::move(img));
  }
  return res;
}

void require_transitive(GenImages const &gimg, std::size_t m)
{
  std::vector<char> seen(m, 0);
  std::vector<std::uint32_t> orb{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (auto const &img : gimg)
      if (!seen[img[orb[i]]]) {
        seen[img[orb[i]]] = 1;
        orb.push_back(img[orb[i]]);
      }
  if (orb.size() != m)
    throw std::invalid_argument("group is not transitive on the orbit");
}

std::size_t smallest_prime_divisor(std::size_t m)
{
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0)
      return p;
  return m;
}

struct UnionFind
{
  explicit UnionFind(std::size_t n) : parent(n), size(n, 1)
  { std::iota(parent.begin(), parent.end(), std::uint32_t{0}); }

  std::uint32_t find(std::uint32_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<std::uint32_t> parent;
  std::vector<std::size_t> size;
};

// Block label per position for the finest nontrivial system, or empty if
// primitive. Atkinson's closure from {0, k} for each k, pruned by size.
std::vector<std::uint32_t> minimal_block_labels(GenImages const &gimg,
                                                std::size_t m)
{
  if (m <= 1)
    return {};
  std::size_t best = m;
  std::vector<std::uint32_t> best_labels;
  std::size_t const floor = smallest_prime_divisor(m);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;

  for (std::uint32_t k = 1; k < m && best > floor; ++k) {
    UnionFind uf(m);
    uf.parent[k] = 0;
    uf.size[0] = 2;
    queue.assign(1, {0, k});
    bool aborted = best <= 2;
    for (std::size_t qi = 0; qi < queue.size() && !aborted; ++qi) {
      auto [p, q] = queue[qi];
      for (auto const &img : gimg) {
        auto a = uf.find(img[p]), b = uf.find(img[q]);
        if (a == b)
          continue;
        if (uf.size[a] < uf.size[b])
          std::swap(a, b);
        uf.parent[b] = a;
        uf.size[a] += uf.size[b];
        if (uf.size[a] >= best) {
          aborted = true;
          break;
        }
        queue.emplace_back(img[p], img[q]);
      }
    }
    if (aborted)
      continue;
    best = uf.size[uf.find(0)];
    best_labels.resize(m);
    for (std::uint32_t i = 0; i < m; ++i)
      best_labels[i] = uf.find(i);
  }
  return best_labels;
}

// Labels -> blocks of positions, each sorted, ordered by min.
std::vector<std::vector<std::uint32_t>>
labels_to_blocks(std::vector<std::uint32_t> const &labels, std::size_t m)
{
  std::vector<std::vector<std::uint32_t>> res;
  if (labels.empty()) {
    for (std::uint32_t i = 0; i < m; ++i)
      res.push_back({i});
    return res;
  }
  std::unordered_map<std::uint32_t, std::size_t> idx;
  for (std::uint32_t i = 0; i < m; ++i) {
    auto [it, fresh] = idx.emplace(labels[i], res.size());
    if (fresh)
      res.emplace_back();
    res[it->second].push_back(i);
  }
  return res;
}

std::vector<std::vector<Point>>
to_points(std::vector<std::vector<std::uint32_t>> const &blocks,
          std::vector<Point> const &pts)
{
  std::vector<std::vector<Point>> res;
  for (auto const &b : blocks) {
    std::vector<Point> pb;
    for (auto i : b)
      pb.push_back(pts[i]);
    res.push_back(std::move(pb));
  }
  return res;
}

} // namespace

std::vector<std::vector<Point>>
minimal_block_system(PermGroup const &g, Action const &act,
                     std::vector<Point> const &orbit)
{
  std::vector<Point> pts = orbit;
  std::sort(pts.begin(), pts.end());
  auto gimg = local_images(g, act, pts);
  require_transitive(gimg, pts.size());
  auto labels = minimal_block_labels(gimg, pts.size());
  return to_points(labels_to_blocks(labels, pts.size()), pts);
}

std::vector<std::vector<Point>>
minimal_block_system(PermGroup const &g, std::vector<Point> const &orbit)
{
  return minimal_block_system(g, NaturalAction(g.degree()), orbit);
}

std::vector<std::vector<Point>>
primitive_block_system(PermGroup const &g, Action const &act,
                       std::vector<Point> const &orbit)
{
  std::vector<Point> pts = orbit;
  std::sort(pts.begin(), pts.end());
  std::size_t const m = pts.size();
  auto gimg = local_images(g, act, pts);
  require_transitive(gimg, m);

  auto blocks = labels_to_blocks(minimal_block_labels(gimg, m), m);
  if (blocks.size() == m)
    return to_points(blocks, pts);

  for (;;) {
    std::vector<std::uint32_t> block_of(m);
    for (std::uint32_t b = 0; b < blocks.size(); ++b)
      for (auto i : blocks[b])
        block_of[i] = b;
    GenImages bimg;
    for (auto const &img : gimg) {
      std::vector<std::uint32_t> bi(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b)
        bi[b] = block_of[img[blocks[b].front()]];
      bimg.push_back(std::move(bi));
    }
    auto coarse = labels_to_blocks(minimal_block_labels(bimg, blocks.size()),
                                   blocks.size());
    if (coarse.size() == blocks.size())
      break;
    std::vector<std::vector<std::uint32_t>> merged;
    for (auto const &cb : coarse) {
      std::vector<std::uint32_t> nb;
      for (auto b : cb)
        nb.insert(nb.end(), blocks[b].begin(), blocks[b].end());
      std::sort(nb.begin(), nb.end());
      merged.push_back(std::move(nb));
    }
    std::sort(merged.begin(), merged.end());
    blocks = std::move(merged);
  }
  return to_points(blocks, pts);
}

namespace
{

// Normal closure of `seeds` in g, stopping once the order reaches `target`.
PermGroup closure_up_to(PermGroup const &g, std::vector<Perm> const &seeds,
                        std::optional<BigInt> const &target)
{
  std::vector<Point> base(g.degree());
  std::iota(base.begin(), base.end(), Point{0});
  detail::StabChain<Perm, detail::PermOps> chain(g.degree(), base,
                                                 detail::PermOps{g.degree()});
  std::vector<Perm> gens;
  auto done = [&] { return target && chain.order() == *target; };
  auto add = [&](Perm const &p) {
    if (chain.sift_from(p, 0).first.is_identity())
      return;
    gens.push_back(p);
    chain.build({p}, nullptr);
  };
  for (auto const &p : seeds)
    add(p);
  for (std::size_t i = 0; i < gens.size() && !done(); ++i)
    for (auto const &x : g.generators())
      add(x.inverse() * gens[i] * x);
  return PermGroup(g.degree(), std::move(gens));
}

using PointMap = std::function<Point(Perm const &, Point)>;

BlockActionResult block_action_impl(PermGroup const &g, PointMap img_of,
                                    std::vector<std::vector<Point>> const &blocks)
{
  std::size_t const m = blocks.size();
  auto block_of = std::make_shared<std::unordered_map<Point, std::uint32_t>>();
  std::vector<Point> reps;
  for (std::uint32_t b = 0; b < m; ++b) {
    reps.push_back(blocks[b].front());
    for (Point p : blocks[b])
      (*block_of)[p] = b;
  }
  auto evaluate = [block_of, reps, img_of](Perm const &x) {
    std::vector<Point> img(reps.size());
    for (std::size_t b = 0; b < reps.size(); ++b)
      img[b] = block_of->at(img_of(x, reps[b]));
    return Perm(std::move(img));
  };

  std::vector<detail::HomElement> hgens;
  for (auto const &s : g.generators())
    hgens.push_back({evaluate(s), s});
  std::vector<Point> base(m);
  std::iota(base.begin(), base.end(), Point{0});
  detail::StabChain<detail::HomElement, detail::HomOps> chain(
    m, base, detail::HomOps{m, g.degree()});
  std::vector<detail::HomElement> residues;
  chain.build(hgens, &residues);

  std::vector<Perm> image_gens, kernel_gens;
  for (auto const &h : hgens)
    image_gens.push_back(h.image);
  for (auto const &r : residues)
    kernel_gens.push_back(r.pre);

  // Residues generate the kernel only up to conjugation.
  BlockActionResult res{PermGroup(m, std::move(image_gens)),
                        closure_up_to(g, kernel_gens, g.order() / chain.order()),
                        {},
                        evaluate};
  chain.for_each_element(
    [&](detail::HomElement const &e) { res.transversal.push_back(e.pre); });
  return res;
}

} // namespace

// `act` must outlive the returned evaluate function.
BlockActionResult action_on_blocks(PermGroup const &g, Action const &act,
                                   std::vector<std::vector<Point>> const &blocks)
{
  return block_action_impl(
    g, [&act](Perm const &x, Point p) { return act.image(x, p); }, blocks);
}

BlockActionResult action_on_blocks(PermGroup const &g,
                                   std::vector<std::vector<Point>> const &blocks)
{
  return block_action_impl(
    g, [](Perm const &x, Point p) { return x[p]; }, blocks);
}

PermGroup normal_closure(PermGroup const &g, std::vector<Perm> const &seeds)
{
  return closure_up_to(g, seeds, std::nullopt);
}

PermGroup derived_subgroup(PermGroup const &g)
{
  std::vector<Perm> comms;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, comms);
}

bool is_solvable(PermGroup const &g)
{
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur.order())
      return false;
    cur = std::move(next);
  }
  return true;
}

std::vector<Perm> right_transversal(PermGroup const &g, PermGroup const &r)
{
  std::vector<Perm> reps{Perm(g.degree())};
  BigInt const index = g.order() / r.order();
  for (std::size_t i = 0; i < reps.size() && BigInt(reps.size()) < index; ++i) {
    for (auto const &s : g.generators()) {
      Perm c = reps[i] * s;
      bool known = std::any_of(reps.begin(), reps.end(), [&](Perm const &t) {
        return r.contains(c * t.inverse());
      });
      if (!known)
        reps.push_back(std::move(c));
    }
  }
  return reps;
}

Perm concat(Perm const &a, Perm const &b)
{
  std::size_t const da = a.degree();
  std::vector<Point> img(da + b.degree());
  for (std::size_t i = 0; i < da; ++i)
    img[i] = a[static_cast<Point>(i)];
  for (std::size_t i = 0; i < b.degree(); ++i)
    img[da + i] = static_cast<Point>(da + b[static_cast<Point>(i)]);
  return Perm(std::move(img));
}

std::pair<Perm, Perm> split(Perm const &p, std::size_t first_degree)
{
  std::size_t const db = p.degree() - first_degree;
  std::vector<Point> a(first_degree), b(db);
  for (std::size_t i = 0; i < first_degree; ++i)
    a[i] = p[static_cast<Point>(i)];
  for (std::size_t i = 0; i < db; ++i)
    b[i] = static_cast<Point>(p[static_cast<Point>(first_degree + i)] -
                              first_degree);
  return {Perm(std::move(a)), Perm(std::move(b))};
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b)
{
  Perm const ida(a.degree()), idb(b.degree());
  auto embed = [&](std::vector<Perm> const &ga, std::vector<Perm> const &gb) {
    std::vector<Perm> gens;
    for (auto const &x : ga)
      gens.push_back(concat(x, idb));
    for (auto const &y : gb)
      gens.push_back(concat(ida, y));
    return gens;
  };
  PermGroup res(a.degree() + b.degree(), embed(a.generators(), b.generators()));
  if (a.has_witness() && b.has_witness()) {
    auto const &wa = *a.witness();
    auto const &wb = *b.witness();
    PermGroup r(a.degree() + b.degree(),
                embed(wa.subgroup_gens(), wb.subgroup_gens()));
    res = res.with_witness(SolvableWitness{
      std::make_shared<PermGroup const>(std::move(r)),
      wa.index_bound * wb.index_bound});
  }
  return res;
}

} // namespace csiso
