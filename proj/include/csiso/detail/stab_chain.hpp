#ifndef CSISO_DETAIL_STAB_CHAIN_HPP
#define CSISO_DETAIL_STAB_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "csiso/perm.hpp"

namespace csiso::detail
{

// Deterministic Schreier-Sims over an element type E. The base is fixed up
// front (the caller passes every point that any element may move, ascending),
// so levels with a trivial basic orbit are allowed. Ops supplies
//   Point act(E const&, Point), E mul(E const&, E const&), E inv(E const&),
//   E identity(), bool acts_trivially(E const&).
// Elements whose action is trivial after sifting are reported as residues;
// for a homomorphism chain these generate the kernel.
template <class E, class Ops>
class StabChain
{
public:
  struct Level
  {
    Point base;
    std::vector<E> gens;
    std::vector<std::int32_t> orbit_pos;
    std::vector<Point> orbit;
    std::vector<E> transversal;  // transversal[i] maps base to orbit[i]
    std::set<std::pair<std::uint32_t, std::uint32_t>> tested;
  };

  StabChain(std::size_t degree, std::vector<Point> const &base, Ops ops = {})
  : degree_(degree), ops_(std::move(ops))
  {
    levels_.reserve(base.size());
    for (Point b : base) {
      Level lv;
      lv.base = b;
      lv.orbit_pos.assign(degree_, -1);
      lv.orbit_pos[b] = 0;
      lv.orbit.push_back(b);
      lv.transversal.push_back(ops_.identity());
      levels_.push_back(std::move(lv));
    }
  }

  void build(std::vector<E> const &gens, std::vector<E> *residues)
  {
    for (auto const &g : gens) {
      if (ops_.acts_trivially(g)) {
        if (residues)
          residues->push_back(g);
        continue;
      }
      add_strong_generator(g, 0, first_moved_level(g));
    }
    if (levels_.empty())
      return;

    auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      auto &lv = levels_[static_cast<std::size_t>(i)];
      bool restarted = false;
      for (std::uint32_t p = 0; p < lv.orbit.size() && !restarted; ++p) {
        for (std::uint32_t s = 0; s < lv.gens.size(); ++s) {
          if (!lv.tested.emplace(p, s).second)
            continue;
          Point img = ops_.act(lv.gens[s], lv.orbit[p]);
          E sch = ops_.mul(ops_.mul(lv.transversal[p], lv.gens[s]),
                           ops_.inv(lv.transversal[lv.orbit_pos[img]]));
          auto [res, lvl] = sift_from(std::move(sch),
                                      static_cast<std::size_t>(i) + 1);
          if (lvl < levels_.size()) {
            add_strong_generator(res, static_cast<std::size_t>(i) + 1, lvl);
            i = static_cast<std::ptrdiff_t>(lvl);
            restarted = true;
            break;
          }
          if (residues && !ops_.is_identity(res))
            residues->push_back(std::move(res));
        }
      }
      if (!restarted)
        --i;
    }
  }

  // Sifts g from level `from`; returns the residue and the level where
  // sifting stopped (levels().size() if it passed every level).
  std::pair<E, std::size_t> sift_from(E g, std::size_t from) const
  {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      auto const &lv = levels_[j];
      Point img = ops_.act(g, lv.base);
      auto pos = lv.orbit_pos[img];
      if (pos < 0)
        return {std::move(g), j};
      if (pos > 0)
        g = ops_.mul(g, ops_.inv(lv.transversal[static_cast<std::size_t>(pos)]));
    }
    return {std::move(g), levels_.size()};
  }

  boost::multiprecision::cpp_int order() const
  {
    boost::multiprecision::cpp_int res = 1;
    for (auto const &lv : levels_)
      res *= lv.orbit.size();
    return res;
  }

  std::vector<Level> const &levels() const { return levels_; }
  std::size_t degree() const { return degree_; }
  Ops const &ops() const { return ops_; }

  // Every element as u_{L-1} * ... * u_0, in odometer order (identity first).
  template <class F>
  void for_each_element(F &&f) const
  {
    std::vector<std::size_t> idx(levels_.size(), 0);
    for (;;) {
      E g = ops_.identity();
      for (std::size_t j = levels_.size(); j-- > 0;)
        g = ops_.mul(g, levels_[j].transversal[idx[j]]);
      f(g);
      std::size_t j = 0;
      while (j < levels_.size() && ++idx[j] == levels_[j].orbit.size()) {
        idx[j] = 0;
        ++j;
      }
      if (j == levels_.size())
        return;
    }
  }

private:
  std::size_t first_moved_level(E const &g) const
  {
    for (std::size_t j = 0; j < levels_.size(); ++j)
      if (ops_.act(g, levels_[j].base) != levels_[j].base)
        return j;
    return levels_.size();
  }

  void add_strong_generator(E const &g, std::size_t from, std::size_t to)
  {
    for (std::size_t j = from; j <= to && j < levels_.size(); ++j) {
      levels_[j].gens.push_back(g);
      extend_orbit(levels_[j]);
    }
  }

  void extend_orbit(Level &lv)
  {
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      for (auto const &s : lv.gens) {
        Point q = ops_.act(s, lv.orbit[i]);
        if (lv.orbit_pos[q] >= 0)
          continue;
        lv.orbit_pos[q] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(ops_.mul(lv.transversal[i], s));
      }
    }
  }

  std::size_t degree_;
  Ops ops_;
  std::vector<Level> levels_;
};

struct PermOps
{
  Point act(Perm const &g, Point p) const { return g[p]; }
  Perm mul(Perm const &a, Perm const &b) const { return a * b; }
  Perm inv(Perm const &a) const { return a.inverse(); }
  Perm identity() const { return Perm(degree); }
  bool acts_trivially(Perm const &g) const { return g.is_identity(); }
  bool is_identity(Perm const &g) const { return g.is_identity(); }
  std::size_t degree = 0;
};

// Element of a homomorphism chain: the image (which drives the chain) paired
// with a preimage in the source group.
struct HomElement
{
  Perm image;
  Perm pre;
};

struct HomOps
{
  Point act(HomElement const &g, Point p) const { return g.image[p]; }
  HomElement mul(HomElement const &a, HomElement const &b) const
  { return {a.image * b.image, a.pre * b.pre}; }
  HomElement inv(HomElement const &a) const
  { return {a.image.inverse(), a.pre.inverse()}; }
  HomElement identity() const { return {Perm(image_degree), Perm(pre_degree)}; }
  bool acts_trivially(HomElement const &g) const { return g.image.is_identity(); }
  bool is_identity(HomElement const &g) const { return g.pre.is_identity(); }
  std::size_t image_degree = 0;
  std::size_t pre_degree = 0;
};

} // namespace csiso::detail

#endif // CSISO_DETAIL_STAB_CHAIN_HPP
