#ifndef CSISO_CAYLEY_GROUP_HPP
#define CSISO_CAYLEY_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csiso/perm.hpp"

namespace csiso
{

using Element = std::uint32_t;

// A finite group given by its multiplication table. The identity is always
// element 0. Construction checks the Latin-square and identity properties;
// associativity is a separate O(n^3) pass (validate_associativity).
class CayleyGroup
{
public:
  CayleyGroup() : CayleyGroup(std::vector<std::vector<Element>>{{0}}) {}
  explicit CayleyGroup(std::vector<std::vector<Element>> const &table,
                       std::string name = "");

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element h, Element x) const  // x^-1 h x
  { return mul(mul(inverse_[x], h), x); }

  std::string const &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::vector<std::vector<Element>> table() const;
  std::vector<Element> const &inverses() const { return inverse_; }

  // Throws ValidationError naming the first violating triple.
  void validate_associativity() const;

  Element element_order(Element x) const;
  bool is_abelian() const;

private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

// Subgroup of a CayleyGroup stored as its sorted element list plus a
// membership mask over the parent. The parent is not stored; every
// operation takes it explicitly.
class Subgroup
{
public:
  Subgroup() = default;
  // `elements` need not be sorted; no closure check is done here.
  Subgroup(std::size_t parent_order, std::vector<Element> elements);

  std::size_t order() const { return elements_.size(); }
  std::size_t parent_order() const { return mask_.size(); }
  std::vector<Element> const &elements() const { return elements_; }
  bool contains(Element x) const { return x < mask_.size() && mask_[x]; }
  // Position of x in elements(), or -1.
  std::int64_t position(Element x) const;

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  { return a.elements_ == b.elements_ && a.mask_.size() == b.mask_.size(); }

  bool is_subset_of(Subgroup const &other) const;

private:
  std::vector<Element> elements_;
  std::vector<char> mask_;
  std::vector<std::int64_t> pos_;
};

struct GroupHom
{
  std::vector<Element> image;
};

// True iff image is multiplicative from `dom` to `cod` and maps 0 to 0.
bool is_homomorphism(CayleyGroup const &dom, CayleyGroup const &cod,
                     GroupHom const &hom);

struct CosetPartition
{
  std::vector<std::vector<Element>> blocks;  // block 0 is H, ordered by min
  std::vector<std::uint32_t> coset_of;       // element -> block index

  std::size_t count() const { return blocks.size(); }
  Element rep(std::size_t i) const { return blocks[i].front(); }
};

struct Quotient
{
  CayleyGroup group;
  GroupHom projection;
  CosetPartition cosets;
};

struct DirectProduct
{
  CayleyGroup group;
  GroupHom embed1, embed2;
  Subgroup factor1, factor2;
  // (a, b) <-> a * |G2| + b
  Element pair(Element a, Element b) const
  { return static_cast<Element>(a * order2 + b); }
  std::size_t order2 = 1;
};

Subgroup whole_group(CayleyGroup const &g);
Subgroup trivial_subgroup(CayleyGroup const &g);

Subgroup subgroup_generated(CayleyGroup const &g,
                            std::span<Element const> seeds);
Subgroup normal_closure(CayleyGroup const &g, std::span<Element const> seeds);
Subgroup centralizer(CayleyGroup const &g, Subgroup const &h);
Subgroup center(CayleyGroup const &g, Subgroup const &h);
Subgroup join(CayleyGroup const &g, Subgroup const &a, Subgroup const &b);
Subgroup intersection(Subgroup const &a, Subgroup const &b);
// Product set AB, assuming it is a subgroup (one of them normal).
Subgroup product(CayleyGroup const &g, Subgroup const &a, Subgroup const &b);

// Full closure/inverse/Lagrange check.
bool is_subgroup(CayleyGroup const &g, Subgroup const &h);
bool is_normal(CayleyGroup const &g, Subgroup const &h);
void require_subgroup(CayleyGroup const &g, Subgroup const &h);
void require_normal(CayleyGroup const &g, Subgroup const &h);

// Restriction of h -> x^-1 h x to H, as a permutation of H's element
// positions. Throws ValidationError if x does not normalize H.
Perm inn_restriction(CayleyGroup const &g, Subgroup const &h, Element x);

CosetPartition cosets(CayleyGroup const &g, Subgroup const &h);
Quotient quotient(CayleyGroup const &g, Subgroup const &h);
DirectProduct direct_product(CayleyGroup const &g1, CayleyGroup const &g2);

// H as a group in its own right, element i <-> h.elements()[i].
CayleyGroup induced_group(CayleyGroup const &g, Subgroup const &h);

// Small generating set, built greedily in element order.
std::vector<Element> generating_set(CayleyGroup const &g, Subgroup const &h);
std::vector<Element> generating_set(CayleyGroup const &g);

std::vector<Subgroup> minimal_normal_subgroups(CayleyGroup const &g);
std::vector<Subgroup> normal_subgroups(CayleyGroup const &g);
bool is_simple(CayleyGroup const &g);
// Decomposition into isomorphic simple minimal normal subgroups when g is
// characteristically simple, nullopt otherwise.
std::optional<std::vector<Subgroup>>
characteristically_simple_decomposition(CayleyGroup const &g);
bool is_characteristically_simple(CayleyGroup const &g);

// Permutation of G's elements as an automorphism check.
bool is_automorphism(CayleyGroup const &g, Perm const &p);

} // namespace csiso

#endif // CSISO_CAYLEY_GROUP_HPP
