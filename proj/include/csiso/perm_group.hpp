#ifndef CSISO_PERM_GROUP_HPP
#define CSISO_PERM_GROUP_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "csiso/perm.hpp"

namespace csiso
{

using BigInt = boost::multiprecision::cpp_int;

// An action of permutations of some faithful degree on a (possibly much
// larger) domain 0..size()-1. Group elements are always stored in their
// faithful degree; the action is evaluated point by point.
class Action
{
public:
  virtual ~Action() = default;
  virtual std::size_t size() const = 0;
  virtual Point image(Perm const &g, Point p) const = 0;
};

class NaturalAction final : public Action
{
public:
  explicit NaturalAction(std::size_t degree) : degree_(degree) {}
  std::size_t size() const override { return degree_; }
  Point image(Perm const &g, Point p) const override { return g[p]; }

private:
  std::size_t degree_;
};

class PermGroup;

// A normal solvable subgroup R of the carrying group X, with |X:R| recorded.
// Stands in for the solvable radical; it need not be the full radical.
struct SolvableWitness
{
  std::shared_ptr<PermGroup const> subgroup;
  BigInt index_bound;

  std::vector<Perm> const &subgroup_gens() const;
};

namespace detail
{
struct PermChain;
}

// Permutation group given by generators, with an eagerly built stabilizer
// chain. Base points are the moved points in increasing order.
class PermGroup
{
public:
  PermGroup() : PermGroup(0) {}
  explicit PermGroup(std::size_t degree);
  PermGroup(std::size_t degree, std::vector<Perm> gens);

  // Throws std::invalid_argument on degree mismatch or an empty list.
  static PermGroup from_generators(std::vector<Perm> gens);

  std::size_t degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return gens_; }
  BigInt const &order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(Perm const &p) const;
  // Residue of sifting p through the chain.
  Perm sift(Perm const &p) const;

  std::vector<Point> base() const;
  std::vector<Perm> strong_generators() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

  // Every element (identity first). Only for small groups.
  std::vector<Perm> elements() const;

  // Lexicographically smallest image array in the coset group * rep.
  Perm lex_min_in_coset(Perm const &rep) const;

  bool is_subgroup_of(PermGroup const &other) const;
  friend bool operator==(PermGroup const &a, PermGroup const &b);

  std::optional<SolvableWitness> const &witness() const { return witness_; }
  bool has_witness() const { return witness_.has_value(); }
  PermGroup with_witness(SolvableWitness w) const;
  // Witness = this group itself (index 1). Caller asserts solvability.
  PermGroup with_self_witness() const;
  // Witness = trivial group, index = order. Always valid.
  PermGroup with_trivial_witness() const;

private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<detail::PermChain const> chain_;
  BigInt order_;
  std::optional<SolvableWitness> witness_;
};

// Either empty, or the right coset {g * rep | g in group}.
class GroupCoset
{
public:
  GroupCoset() = default;
  GroupCoset(PermGroup group, Perm rep);
  static GroupCoset empty() { return GroupCoset(); }

  bool is_empty() const { return !group_.has_value(); }
  PermGroup const &group() const { return *group_; }
  Perm const &rep() const { return rep_; }
  bool contains(Perm const &p) const;
  BigInt size() const { return is_empty() ? BigInt(0) : group_->order(); }

private:
  std::optional<PermGroup> group_;
  Perm rep_;
};

// Orbits of g on a g-stable point list, each sorted, ordered by min point.
std::vector<std::vector<Point>> orbits(PermGroup const &g, Action const &act,
                                       std::vector<Point> const &points);
std::vector<std::vector<Point>> orbits(PermGroup const &g);

// Finest nontrivial block system of g on a transitive orbit: minimum block
// size, ties broken by the lexicographically smallest block through the
// smallest orbit point. Singletons if g is primitive on the orbit.
// Throws std::invalid_argument if g is not transitive on `orbit`.
std::vector<std::vector<Point>>
minimal_block_system(PermGroup const &g, Action const &act,
                     std::vector<Point> const &orbit);
std::vector<std::vector<Point>>
minimal_block_system(PermGroup const &g, std::vector<Point> const &orbit);

// Block system on which g acts primitively (maximal blocks), obtained by
// coarsening minimal systems. Singletons if g is primitive on the orbit.
std::vector<std::vector<Point>>
primitive_block_system(PermGroup const &g, Action const &act,
                       std::vector<Point> const &orbit);

struct BlockActionResult
{
  PermGroup image;                     // on block indices
  PermGroup kernel;                    // elements fixing every block
  std::vector<Perm> transversal;       // right transversal of kernel, id first
  std::function<Perm(Perm const &)> evaluate;
};

BlockActionResult action_on_blocks(PermGroup const &g, Action const &act,
                                   std::vector<std::vector<Point>> const &blocks);
BlockActionResult action_on_blocks(PermGroup const &g,
                                   std::vector<std::vector<Point>> const &blocks);

PermGroup derived_subgroup(PermGroup const &g);
bool is_solvable(PermGroup const &g);

// Smallest normal subgroup of g containing `seeds`.
PermGroup normal_closure(PermGroup const &g, std::vector<Perm> const &seeds);

// Right coset representatives of r in g (r <= g), identity first.
std::vector<Perm> right_transversal(PermGroup const &g, PermGroup const &r);

// A x B acting on the disjoint union of degrees (a on the first block).
PermGroup direct_product(PermGroup const &a, PermGroup const &b);
Perm concat(Perm const &a, Perm const &b);
std::pair<Perm, Perm> split(Perm const &p, std::size_t first_degree);

} // namespace csiso

#endif // CSISO_PERM_GROUP_HPP
