#include "csiso/set_stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "csiso/error.hpp"

namespace csiso
{

namespace
{

class Refiner
{
public:
  Refiner(Action const &act, std::vector<Point> const &delta,
          StabObserver const &observer)
  : act_(act), in_delta_(act.size(), 0), observer_(observer)
  {
    for (Point p : delta) {
      if (p >= act.size())
        throw std::invalid_argument("point outside the action domain");
      in_delta_[p] = 1;
    }
  }

  GroupCoset refine(GroupCoset const &x, std::vector<Point> const &window)
  {
    GroupCoset res = refine_impl(x, window);
    if (observer_)
      observer_(x, window, res);
    return res;
  }

private:
  GroupCoset refine_impl(GroupCoset x, std::vector<Point> const &window)
  {
    if (x.is_empty())
      return x;
    if (x.group().is_trivial()) {
      for (Point p : window)
        if (in_delta_[p] != in_delta_[act_.image(x.rep(), p)])
          return GroupCoset::empty();
      return x;
    }
    BigInt const order = x.group().order();
    for (auto const &orb : orbits(x.group(), act_, window)) {
      x = x.group().order() == order ? transitive(x, orb) : refine(x, orb);
      if (x.is_empty())
        break;
    }
    return x;
  }

  GroupCoset transitive(GroupCoset const &x, std::vector<Point> const &orb)
  {
    std::size_t here = 0, there = 0;
    for (Point p : orb) {
      here += in_delta_[p];
      there += in_delta_[act_.image(x.rep(), p)];
    }
    if (here != there)
      return GroupCoset::empty();
    if (here == 0 || here == orb.size())
      return x;

    auto blocks = primitive_block_system(x.group(), act_, orb);
    auto ba = action_on_blocks(x.group(), act_, blocks);
    std::vector<GroupCoset> parts;
    for (auto const &t : ba.transversal) {
      GroupCoset y = refine(GroupCoset(ba.kernel, t * x.rep()), orb);
      if (!y.is_empty())
        parts.push_back(std::move(y));
    }
    return merge_cosets(parts);
  }

  Action const &act_;
  std::vector<char> in_delta_;
  StabObserver const &observer_;
};

PermGroup project_first(std::vector<Perm> const &gens, std::size_t d)
{
  std::vector<Perm> firsts;
  for (auto const &g : gens)
    firsts.push_back(split(g, d).first);
  return PermGroup(d, std::move(firsts));
}

} // namespace

GroupCoset merge_cosets(std::vector<GroupCoset> const &parts)
{
  if (parts.empty())
    return GroupCoset::empty();
  auto const &first = parts.front();
  if (parts.size() == 1)
    return first;
  std::vector<Perm> gens = first.group().generators();
  Perm const r1_inv = first.rep().inverse();
  for (std::size_t i = 1; i < parts.size(); ++i)
    gens.push_back(parts[i].rep() * r1_inv);
  return GroupCoset(PermGroup(first.group().degree(), std::move(gens)),
                    first.rep());
}

GroupCoset stab_coset(StabTask const &task, Action const &act,
                      StabObserver const &observer)
{
  Refiner r(act, task.delta, observer);
  std::vector<Point> window = task.window;
  std::sort(window.begin(), window.end());
  return r.refine(task.coset, window);
}

GroupCoset stab_coset(StabTask const &task)
{
  if (task.coset.is_empty())
    return task.coset;
  NaturalAction nat(task.coset.group().degree());
  return stab_coset(task, nat);
}

PermGroup set_stabilizer(PermGroup const &g, Action const &act,
                         std::vector<Point> const &delta,
                         StabObserver const &observer)
{
  if (!g.has_witness())
    throw ContractError("set_stabilizer: group carries no solvable witness");
  auto const &w = *g.witness();
  std::vector<Point> window;
  for (auto const &orb : orbits(g, act, delta))
    window.insert(window.end(), orb.begin(), orb.end());
  std::sort(window.begin(), window.end());

  Refiner r(act, delta, observer);
  std::vector<GroupCoset> parts;
  for (auto const &rep : right_transversal(g, *w.subgroup)) {
    GroupCoset y = r.refine(GroupCoset(*w.subgroup, rep), window);
    if (!y.is_empty())
      parts.push_back(std::move(y));
  }
  // The identity coset always survives and comes first.
  PermGroup radical_part = parts.front().group();
  PermGroup res = merge_cosets(parts).group();
  return res.with_witness(SolvableWitness{
    std::make_shared<PermGroup const>(std::move(radical_part)),
    w.index_bound});
}

PermGroup set_stabilizer(PermGroup const &g, std::vector<Point> const &delta)
{
  NaturalAction nat(g.degree());
  return set_stabilizer(g, nat, delta);
}

WreathParts decode_wreath(Perm const &w, std::size_t d)
{
  bool const swaps = d > 0 && w[0] >= d;
  std::vector<Point> a(d), b(d);
  for (std::size_t i = 0; i < d; ++i) {
    a[i] = static_cast<Point>(w[static_cast<Point>(i)] - (swaps ? d : 0));
    b[i] = static_cast<Point>(w[static_cast<Point>(d + i)] - (swaps ? 0 : d));
  }
  return {swaps, Perm(std::move(a)), Perm(std::move(b))};
}

Point WreathAction::image(Perm const &w, Point p) const
{
  std::size_t const n = base_.size();
  auto parts = decode_wreath(w, d_);
  bool const second = p >= n;
  Point x = static_cast<Point>(second ? p - n : p);
  Point y = base_.image(second ? parts.second : parts.first, x);
  bool const lands_second = second != parts.swaps;
  return static_cast<Point>(lands_second ? y + n : y);
}

GroupCoset set_transporter(PermGroup const &g, Action const &act,
                           std::vector<Point> const &delta,
                           std::vector<Point> const &lambda)
{
  if (!g.has_witness())
    throw ContractError("set_transporter: group carries no solvable witness");
  if (delta.size() != lambda.size())
    return GroupCoset::empty();
  std::size_t const d = g.degree();
  Perm const id(d);
  std::vector<Perm> wgens;
  for (auto const &s : g.generators()) {
    wgens.push_back(concat(s, id));
    wgens.push_back(concat(id, s));
  }
  std::vector<Point> sw(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    sw[i] = static_cast<Point>(d + i);
    sw[d + i] = static_cast<Point>(i);
  }
  Perm const swap(std::move(sw));
  wgens.push_back(swap);

  auto const &w = *g.witness();
  std::vector<Perm> rgens;
  for (auto const &s : w.subgroup_gens()) {
    rgens.push_back(concat(s, id));
    rgens.push_back(concat(id, s));
  }
  PermGroup wreath = PermGroup(2 * d, std::move(wgens))
    .with_witness(SolvableWitness{
      std::make_shared<PermGroup const>(PermGroup(2 * d, std::move(rgens))),
      2 * w.index_bound * w.index_bound});

  WreathAction wact(act, d);
  std::vector<Point> target = delta;
  for (Point l : lambda)
    target.push_back(static_cast<Point>(act.size() + l));
  PermGroup stab = set_stabilizer(wreath, wact, target);

  auto const &sgens = stab.generators();
  auto it = std::find_if(sgens.begin(), sgens.end(), [&](Perm const &s) {
    return decode_wreath(s, d).swaps;
  });
  if (it == sgens.end())
    return GroupCoset::empty();
  Perm const s = *it, s_inv = it->inverse();
  std::vector<Perm> even;
  for (auto const &x : sgens) {
    if (decode_wreath(x, d).swaps) {
      even.push_back(x * s_inv);
      even.push_back(s * x);
    } else {
      even.push_back(x);
      even.push_back(s * x * s_inv);
    }
  }
  PermGroup ginv = project_first(even, d);
  PermGroup rad = project_first(stab.witness()->subgroup_gens(), d);
  ginv = ginv.with_witness(SolvableWitness{
    std::make_shared<PermGroup const>(std::move(rad)), w.index_bound});
  return GroupCoset(std::move(ginv), decode_wreath(s, d).first);
}

GroupCoset set_transporter(PermGroup const &g, std::vector<Point> const &delta,
                           std::vector<Point> const &lambda)
{
  NaturalAction nat(g.degree());
  return set_transporter(g, nat, delta, lambda);
}

GroupCoset set_transporter(GroupCoset const &x, Action const &act,
                           std::vector<Point> const &delta,
                           std::vector<Point> const &lambda)
{
  if (x.is_empty())
    return x;
  Perm const xi = x.rep().inverse();
  std::vector<Point> pulled;
  for (Point l : lambda)
    pulled.push_back(act.image(xi, l));
  GroupCoset t = set_transporter(x.group(), act, delta, pulled);
  if (t.is_empty())
    return t;
  return GroupCoset(t.group(), t.rep() * x.rep());
}

PermGroup intersection_diagonal(PermGroup const &a, PermGroup const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersection_diagonal: degree mismatch");
  if (!a.has_witness() && !b.has_witness())
    throw ContractError("intersection_diagonal: neither side has a witness");
  std::size_t const d = a.degree();
  PermGroup p = direct_product(a.has_witness() ? a : a.with_trivial_witness(),
                               b.has_witness() ? b : b.with_trivial_witness());
  PairAction pact(d, d);
  std::vector<Point> diag;
  for (std::size_t i = 0; i < d; ++i)
    diag.push_back(static_cast<Point>(i * d + i));
  PermGroup s = set_stabilizer(p, pact, diag);
  PermGroup res = project_first(s.generators(), d);
  PermGroup rad = project_first(s.witness()->subgroup_gens(), d);
  return res.with_witness(SolvableWitness{
    std::make_shared<PermGroup const>(std::move(rad)),
    p.witness()->index_bound});
}

TupleAction::TupleAction(std::size_t n, std::size_t k) : n_(n), k_(k), size_(1)
{
  for (std::size_t i = 0; i < k; ++i)
    size_ *= n;
}

Point TupleAction::image(Perm const &g, Point p) const
{
  std::size_t res = 0, w = 1;
  for (std::size_t i = 0; i < k_; ++i, p = static_cast<Point>(p / n_), w *= n_)
    res += g[static_cast<Point>(p % n_)] * w;
  return static_cast<Point>(res);
}

Point PairAction::image(Perm const &g, Point p) const
{
  Point i = static_cast<Point>(p / db_), j = static_cast<Point>(p % db_);
  return static_cast<Point>(g[i] * db_ + (g[static_cast<Point>(da_ + j)] - da_));
}

} // namespace csiso
