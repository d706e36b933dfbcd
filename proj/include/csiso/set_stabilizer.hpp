#ifndef CSISO_SET_STABILIZER_HPP
#define CSISO_SET_STABILIZER_HPP

#include <functional>
#include <vector>

#include "csiso/perm_group.hpp"

namespace csiso
{

// X = coset, with Delta and a window Pi stable under X's group.
struct StabTask
{
  GroupCoset coset;
  std::vector<Point> delta;
  std::vector<Point> window;
};

// Called once per recursion node with the node's coset, window and result.
using StabObserver = std::function<void(
  GroupCoset const &, std::vector<Point> const &, GroupCoset const &)>;

// {x in Ga | (Delta n Pi)^x = Delta n Pi^a}. Empty is a normal outcome.
GroupCoset stab_coset(StabTask const &task, Action const &act,
                      StabObserver const &observer = nullptr);
GroupCoset stab_coset(StabTask const &task);

// G_Delta. G must carry a witness; the search is split over its cosets.
// The result carries the witness intersected with G_Delta.
// Throws ContractError if G has no witness.
PermGroup set_stabilizer(PermGroup const &g, Action const &act,
                         std::vector<Point> const &delta,
                         StabObserver const &observer = nullptr);
PermGroup set_stabilizer(PermGroup const &g, std::vector<Point> const &delta);

// {g in G | Delta^g = Lambda}, through the stabilizer of Delta u Lambda' in
// G wr C2.
GroupCoset set_transporter(PermGroup const &g, Action const &act,
                           std::vector<Point> const &delta,
                           std::vector<Point> const &lambda);
GroupCoset set_transporter(PermGroup const &g, std::vector<Point> const &delta,
                           std::vector<Point> const &lambda);
// Same for the coset G x.
GroupCoset set_transporter(GroupCoset const &x, Action const &act,
                           std::vector<Point> const &delta,
                           std::vector<Point> const &lambda);

// A n B for two groups of the same degree, as the stabilizer of the diagonal
// of A x B on pairs. At most one of them may lack a witness.
PermGroup intersection_diagonal(PermGroup const &a, PermGroup const &b);

// Diagonal action of Sym(n) on k-tuples, tuple (x_0..x_{k-1}) <-> sum x_i n^(k-1-i).
class TupleAction final : public Action
{
public:
  TupleAction(std::size_t n, std::size_t k);
  std::size_t size() const override { return size_; }
  Point image(Perm const &g, Point p) const override;

private:
  std::size_t n_, k_, size_;
};

// A x B, given as permutations of degree da + db, on pairs (i, j) <-> i*db + j.
class PairAction final : public Action
{
public:
  PairAction(std::size_t da, std::size_t db) : da_(da), db_(db) {}
  std::size_t size() const override { return da_ * db_; }
  Point image(Perm const &g, Point p) const override;

private:
  std::size_t da_, db_;
};

// G wr C2 of degree 2d acting on two copies of an action of G.
class WreathAction final : public Action
{
public:
  WreathAction(Action const &base, std::size_t d) : base_(base), d_(d) {}
  std::size_t size() const override { return 2 * base_.size(); }
  Point image(Perm const &w, Point p) const override;

private:
  Action const &base_;
  std::size_t d_;
};

// Components of a wreath element: (swaps, first, second).
struct WreathParts
{
  bool swaps;
  Perm first, second;
};
WreathParts decode_wreath(Perm const &w, std::size_t d);

// Fold nonempty cosets U r_1, U r_2, ... of a common group U into
// <U, r_i r_1^-1> r_1. Empty input gives Empty.
GroupCoset merge_cosets(std::vector<GroupCoset> const &parts);

} // namespace csiso

#endif // CSISO_SET_STABILIZER_HPP
