#ifndef CSISO_SERIES_HPP
#define CSISO_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "csiso/aut_lifting.hpp"
#include "csiso/cayley_group.hpp"
#include "csiso/perm_group.hpp"

namespace csiso
{

// G = terms[0] > terms[1] > ... > terms.back() = 1.
struct SeriesSpec
{
  CayleyGroup group;
  std::vector<Subgroup> terms;
};

struct SeriesReport
{
  bool ok = true;
  bool composition = true;  // every factor simple
  std::string message;      // first violation
};

SeriesReport validate_series(SeriesSpec const &spec);
// Throws ValidationError unless spec is a composition series.
void require_composition_series(SeriesSpec const &spec);

struct CharSeries
{
  std::vector<Subgroup> terms;          // K_0 = G > ... > K_r = 1
  std::vector<std::size_t> factor_order;  // simple factor order per section
  std::vector<bool> abelian;              // per section
};

// Characteristic series of g: repeatedly adjoin every minimal normal subgroup
// of G/L of the smallest (factor order, abelian) type.
CharSeries characteristic_series(CayleyGroup const &g);

struct Refinement
{
  CharSeries chars;
  SeriesSpec refined;
  std::vector<std::size_t> char_index;  // K_i == refined.terms[char_index[i]]
};

// Terms (K_i n G_j) K_{i+1}, duplicates removed. Throws ValidationError if
// spec is not a composition series.
Refinement characteristic_refinement(SeriesSpec const &spec);

// gamma maps each term of the series onto itself.
bool fixes_series(SeriesSpec const &spec, Perm const &gamma);

// Upper bound on |G| (|G1 x G2| for isomorphism) for the full pipeline,
// from CSISO_MAX_ORDER, default 64.
std::size_t max_order();

// Auto: bottom-up lifts with L2; top-down uses L1 on abelian sections and
// L2 on nonabelian ones.
enum class Engine
{
  L1,
  L2,
  Auto
};

PermGroup bottom_up_auto(SeriesSpec const &spec, Engine engine = Engine::Auto);
PermGroup top_down_auto(SeriesSpec const &spec, Engine engine = Engine::Auto);

struct IsoResult
{
  bool isomorphic = false;
  GroupHom iso;                        // G1 -> G2 when isomorphic
  std::optional<PermGroup> autgroup;   // series automorphisms of G1
};

IsoResult comp_series_iso(SeriesSpec const &spec1, SeriesSpec const &spec2);

// Depth-first over maximal normal subgroups, deterministic order; stops
// after `limit` series.
std::vector<SeriesSpec> enumerate_composition_series(
  CayleyGroup const &g, std::size_t limit = static_cast<std::size_t>(-1));

IsoResult full_iso(CayleyGroup const &g1, CayleyGroup const &g2);

} // namespace csiso

#endif // CSISO_SERIES_HPP
