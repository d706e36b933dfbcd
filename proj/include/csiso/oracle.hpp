#ifndef CSISO_ORACLE_HPP
#define CSISO_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "csiso/cayley_group.hpp"
#include "csiso/perm.hpp"

// Exhaustive reference implementations. Nothing here calls into the solver
// modules; only CayleyGroup, Perm and GroupHom are shared.
namespace csiso::oracle
{

// Builders.
CayleyGroup cyclic(std::size_t n);
CayleyGroup dihedral(std::size_t m);   // order 2m
CayleyGroup dicyclic(std::size_t m);   // order 4m, Dic_2 = Q8
// C_m x| C_k with the generator of C_k acting as x -> r*x.
CayleyGroup semidirect_cyclic(std::size_t m, std::size_t k, std::size_t r);
CayleyGroup product(CayleyGroup const &a, CayleyGroup const &b);
CayleyGroup elementary_abelian(std::size_t p, std::size_t k);
// Closure of permutations; element 0 is the identity, the rest in BFS order.
CayleyGroup from_permutations(std::vector<Perm> const &gens,
                              std::string name = "");
// Table transported along sigma (a bijection fixing 0).
CayleyGroup relabel(CayleyGroup const &g, Perm const &sigma);

struct Entry
{
  std::string name;
  CayleyGroup group;
};

// C2..C16, C2xC2, C2xC4, C2xC2xC2, C3xC3, S3, D4, Q8, D5, D6, A4, Dic3,
// C3:C4, S4.
std::vector<Entry> const &catalog();
CayleyGroup const &catalog_group(std::string const &name);

using Series = std::vector<std::vector<Element>>;  // G_0 .. G_m

std::vector<Perm> all_automorphisms(CayleyGroup const &g);
std::vector<Perm> aut_fixing_series(CayleyGroup const &g, Series const &s);
std::vector<GroupHom> all_isomorphisms(CayleyGroup const &g1,
                                       CayleyGroup const &g2);
std::vector<GroupHom> iso_matching_series(CayleyGroup const &g1,
                                          Series const &s1,
                                          CayleyGroup const &g2,
                                          Series const &s2);

// Every composition series, each term as a sorted element list.
std::vector<Series> composition_series(CayleyGroup const &g);

// Elements of <gens> (degree d) stabilizing delta setwise, sorted.
std::vector<Perm> group_elements(std::size_t degree,
                                 std::vector<Perm> const &gens);
std::vector<Perm> brute_set_stabilizer(std::size_t degree,
                                       std::vector<Perm> const &gens,
                                       std::vector<Point> const &delta);

struct PermFixture
{
  std::string name;
  std::size_t degree;
  std::vector<Perm> gens;
  bool solvable;
};

// Permutation groups of degree <= 8.
std::vector<PermFixture> const &perm_fixtures();

// True iff the list is closed under products and inverses.
bool is_closed(std::vector<Perm> const &elements);

} // namespace csiso::oracle

#endif // CSISO_ORACLE_HPP
