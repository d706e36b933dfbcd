#ifndef CSISO_AUT_LIFTING_HPP
#define CSISO_AUT_LIFTING_HPP

#include <map>
#include <optional>
#include <vector>

#include "csiso/cayley_group.hpp"
#include "csiso/perm_group.hpp"

namespace csiso
{

// Everything about the pair (G, H) that the lifting steps reuse. Permutations
// of G ("big perms") act on element indices, permutations of Q on H-coset
// indices, permutations of H on positions in h.elements().
struct SectionContext
{
  CayleyGroup g;
  Subgroup h;
  CosetPartition cosets_h;   // coset index == element of q
  CayleyGroup q;             // G/H
  Subgroup c;                // C_G(H)
  Subgroup hc;               // HC
  Subgroup zh;               // Z(H)
  CosetPartition cosets_hc;  // G/HC
  CayleyGroup q_hc;
  std::vector<Perm> inn;                  // inn_H(x) for each x in G
  std::map<Perm, std::uint32_t> inn_coset;  // inn_H(x) -> HC-coset of x
  std::vector<std::uint32_t> hc_of_coset;   // H-coset -> HC-coset
  std::vector<Element> h_gens;
  std::vector<Element> zh_gens;
};

// Throws ValidationError if h is not normal in g.
SectionContext build_context(CayleyGroup const &g, Subgroup const &h);

struct AutPair
{
  Perm alpha;  // on G/H
  Perm beta;   // on H
};

// Throws ValidationError if gamma does not fix H or does not map cosets to
// cosets.
AutPair theta(SectionContext const &ctx, Perm const &gamma);

std::vector<Perm> ker_L1_generators(SectionContext const &ctx);
std::vector<Perm> ker_L2_generators(SectionContext const &ctx);

Perm lift_L1(SectionContext const &ctx, AutPair const &pair);
bool l2_condition(SectionContext const &ctx, AutPair const &pair);
// Throws ContractError when some coset has no admissible image point.
Perm lift_L2(SectionContext const &ctx, AutPair const &pair);

// (hg)^gamma = h^gamma g^gamma for h in H, g in G.
bool left_law(SectionContext const &ctx, Perm const &gamma);
// Also (gh)^gamma = g^gamma h^gamma.
bool two_sided_law(SectionContext const &ctx, Perm const &gamma);

// Pair groups: A on G/H, B on H. Missing witnesses are replaced by the
// trivial one.
PermGroup build_L1_hat(SectionContext const &ctx, PermGroup const &a,
                       PermGroup const &b);
PermGroup step1_stabilize_HC(SectionContext const &ctx, PermGroup const &a);
// quotient_auts: all of Aut(G/HC) as permutations of HC-coset indices.
// Without it, B is filtered elementwise when |B| <= |H|^2; otherwise
// ContractError.
PermGroup step2_normalize_inn(SectionContext const &ctx, PermGroup const &b,
                              std::optional<std::vector<Perm>> const &quotient_auts);
// M <= A x B, as permutations of degree |G/H| + |H|.
PermGroup step3_match(SectionContext const &ctx, PermGroup const &a,
                      PermGroup const &b);
PermGroup build_L2_hat(SectionContext const &ctx, PermGroup const &m);
PermGroup step5_cut_to_aut(SectionContext const &ctx, PermGroup const &lhat);

enum class Variant
{
  L1,
  L2
};

// How step 2 handles inn_H(G) when HC < G: list Aut(G/HC) (computed here
// unless supplied) or filter B elementwise.
enum class Step2Mode
{
  ListQuotient,
  FilterB
};

// Aut(G)_H n Theta^-1(A x B).
PermGroup autlifting(SectionContext const &ctx, PermGroup const &a,
                     PermGroup const &b, Variant variant,
                     std::optional<std::vector<Perm>> quotient_auts = std::nullopt,
                     Step2Mode mode = Step2Mode::ListQuotient);

// Wall-clock seconds spent in each stage of autlifting, accumulated over
// calls on this thread. Reset by assigning {}.
struct StageTimes
{
  double step1 = 0, step2 = 0, step3 = 0, hat = 0, step5 = 0;
  double total() const { return step1 + step2 + step3 + hat + step5; }
};
StageTimes &stage_times();

} // namespace csiso

#endif // CSISO_AUT_LIFTING_HPP
