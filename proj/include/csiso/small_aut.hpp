#ifndef CSISO_SMALL_AUT_HPP
#define CSISO_SMALL_AUT_HPP

#include <vector>

#include "csiso/cayley_group.hpp"
#include "csiso/perm_group.hpp"

namespace csiso
{

// Every automorphism of a small group, by a search over images of a fixed
// generating set (identity first, then increasing image arrays).
std::vector<Perm> list_automorphisms(CayleyGroup const &g);

// Aut(g) as a permutation group on g's elements, with a witness: itself when
// solvable, the trivial group otherwise.
PermGroup automorphism_group(CayleyGroup const &g);

// Subgroup of Sym(n) generated by a full element list, with the same witness
// rule as automorphism_group.
PermGroup group_from_elements(std::size_t degree,
                              std::vector<Perm> const &elements);

bool is_solvable(CayleyGroup const &g, Subgroup const &h);

} // namespace csiso

#endif // CSISO_SMALL_AUT_HPP
