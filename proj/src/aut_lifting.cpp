#include "csiso/aut_lifting.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "csiso/error.hpp"
#include "csiso/set_stabilizer.hpp"
#include "csiso/small_aut.hpp"

namespace csiso
{

namespace
{

PermGroup ensure_witness(PermGroup const &g)
{
  return g.has_witness() ? g : g.with_trivial_witness();
}

std::vector<Point> beta_inverse(Perm const &beta)
{
  return beta.inverse().image_vector();
}

// beta o inn o beta^-1 as a permutation of H positions.
Perm conjugate_inn(Perm const &beta, std::vector<Point> const &beta_inv,
                   Perm const &inn)
{
  std::vector<Point> t(beta.degree());
  for (Point i = 0; i < t.size(); ++i)
    t[i] = beta[inn[beta_inv[i]]];
  return Perm(std::move(t));
}

Perm lift_with(SectionContext const &ctx, AutPair const &pair,
               std::vector<Element> const &targets)
{
  auto const &hel = ctx.h.elements();
  std::vector<Point> img(ctx.g.order());
  for (std::size_t c = 0; c < ctx.cosets_h.count(); ++c) {
    Element const a = ctx.cosets_h.rep(c), b = targets[c];
    for (std::size_t i = 0; i < hel.size(); ++i)
      img[ctx.g.mul(hel[i], a)] =
        ctx.g.mul(hel[pair.beta[static_cast<Point>(i)]], b);
  }
  return Perm(std::move(img));
}

std::vector<Perm> kernel_gens(SectionContext const &ctx,
                              std::vector<Element> const &by)
{
  std::vector<Perm> res;
  for (std::size_t c = 1; c < ctx.cosets_h.count(); ++c)
    for (Element z : by) {
      std::vector<Point> img(ctx.g.order());
      for (Element x = 0; x < ctx.g.order(); ++x)
        img[x] = x;
      for (Element x : ctx.cosets_h.blocks[c])
        img[x] = ctx.g.mul(x, z);
      res.emplace_back(std::move(img));
    }
  return res;
}

// Normalizer of inn_H(G) in b through coset transporters of the graphs of
// the inn_H cosets, one run per automorphism of G/HC.
PermGroup inn_normalizer(SectionContext const &ctx, PermGroup const &b,
                         std::vector<Perm> const &quotient_auts)
{
  std::size_t const hn = ctx.h.order();
  TupleAction pairs(hn, 2);
  std::map<std::uint32_t, std::vector<Point>> delta;
  auto graph = [&](std::uint32_t c) -> std::vector<Point> const & {
    auto it = delta.find(c);
    if (it != delta.end())
      return it->second;
    std::set<Point> pts;
    for (Element x : ctx.cosets_hc.blocks[c])
      for (Point i = 0; i < hn; ++i)
        pts.insert(static_cast<Point>(i * hn + ctx.inn[x][i]));
    return delta.emplace(c, std::vector<Point>(pts.begin(), pts.end()))
      .first->second;
  };
  auto const gens = generating_set(ctx.q_hc);
  std::vector<GroupCoset> parts;
  for (auto const &sigma : quotient_auts) {
    GroupCoset x(b, Perm(b.degree()));
    for (Element c : gens) {
      x = set_transporter(x, pairs, graph(c), graph(sigma[c]));
      if (x.is_empty())
        break;
    }
    if (!x.is_empty())
      parts.push_back(std::move(x));
  }
  return merge_cosets(parts).group();
}

bool normalizes_inn(SectionContext const &ctx, Perm const &beta)
{
  auto const bi = beta_inverse(beta);
  for (std::size_t c = 0; c < ctx.cosets_hc.count(); ++c)
    if (!ctx.inn_coset.count(
          conjugate_inn(beta, bi, ctx.inn[ctx.cosets_hc.rep(c)])))
      return false;
  return true;
}

// (alpha, beta) in A x B acting on pairs of HC-cosets through the induced
// maps on G/HC.
class MatchAction final : public Action
{
public:
  MatchAction(SectionContext const &ctx) : ctx_(ctx), m_(ctx.cosets_hc.count())
  {}
  std::size_t size() const override { return m_ * m_; }
  Point image(Perm const &g, Point p) const override
  {
    std::size_t const dq = ctx_.cosets_h.count(), dh = ctx_.h.order();
    auto c1 = static_cast<std::uint32_t>(p / m_);
    auto c2 = static_cast<std::uint32_t>(p % m_);
    Element const r1 = ctx_.cosets_hc.rep(c1);
    auto a = ctx_.hc_of_coset[g[ctx_.cosets_h.coset_of[r1]]];

    std::vector<Point> beta(dh), beta_inv(dh);
    for (Point i = 0; i < dh; ++i) {
      beta[i] = static_cast<Point>(g[static_cast<Point>(dq + i)] - dq);
      beta_inv[beta[i]] = i;
    }
    Perm const &inn = ctx_.inn[ctx_.cosets_hc.rep(c2)];
    std::vector<Point> t(dh);
    for (Point i = 0; i < dh; ++i)
      t[i] = beta[inn[beta_inv[i]]];
    auto it = ctx_.inn_coset.find(Perm(std::move(t)));
    if (it == ctx_.inn_coset.end())
      throw ContractError("step 3: B does not normalize inn_H(G)");
    return static_cast<Point>(a * m_ + it->second);
  }

private:
  SectionContext const &ctx_;
  std::size_t m_;
};

} // namespace

SectionContext build_context(CayleyGroup const &g, Subgroup const &h)
{
  require_normal(g, h);
  SectionContext ctx;
  ctx.g = g;
  ctx.h = h;
  ctx.cosets_h = cosets(g, h);
  ctx.q = quotient(g, h).group;
  ctx.c = centralizer(g, h);
  ctx.hc = join(g, h, ctx.c);
  ctx.zh = center(g, h);
  auto qhc = quotient(g, ctx.hc);
  ctx.cosets_hc = std::move(qhc.cosets);
  ctx.q_hc = std::move(qhc.group);
  for (Element x = 0; x < g.order(); ++x) {
    ctx.inn.push_back(inn_restriction(g, h, x));
    auto [it, fresh] = ctx.inn_coset.emplace(ctx.inn.back(),
                                             ctx.cosets_hc.coset_of[x]);
    if (!fresh && it->second != ctx.cosets_hc.coset_of[x])
      throw ContractError("inn_H is not constant on HC-cosets");
  }
  // |inn_H(G) : inn_H(H)| = |G : HC|
  if (ctx.inn_coset.size() != ctx.cosets_hc.count() * (h.order() / ctx.zh.order()))
    throw ContractError("inn_H(G)/inn_H(H) and G/HC differ in order");
  for (std::size_t c = 0; c < ctx.cosets_h.count(); ++c)
    ctx.hc_of_coset.push_back(ctx.cosets_hc.coset_of[ctx.cosets_h.rep(c)]);
  ctx.h_gens = generating_set(g, h);
  ctx.zh_gens = generating_set(g, ctx.zh);
  return ctx;
}

AutPair theta(SectionContext const &ctx, Perm const &gamma)
{
  if (gamma.degree() != ctx.g.order())
    throw ValidationError("theta: permutation degree differs from |G|");
  std::vector<Point> alpha(ctx.cosets_h.count());
  for (std::size_t c = 0; c < ctx.cosets_h.count(); ++c) {
    auto const &block = ctx.cosets_h.blocks[c];
    auto target = ctx.cosets_h.coset_of[gamma[block.front()]];
    for (Element x : block)
      if (ctx.cosets_h.coset_of[gamma[x]] != target)
        throw ValidationError("theta: gamma splits an H-coset");
    alpha[c] = target;
  }
  if (alpha[0] != 0)
    throw ValidationError("theta: gamma does not fix H");
  std::vector<Point> beta;
  for (Element x : ctx.h.elements())
    beta.push_back(static_cast<Point>(ctx.h.position(gamma[x])));
  return {Perm(std::move(alpha)), Perm(std::move(beta))};
}

std::vector<Perm> ker_L1_generators(SectionContext const &ctx)
{
  return kernel_gens(ctx, ctx.h_gens);
}

std::vector<Perm> ker_L2_generators(SectionContext const &ctx)
{
  return kernel_gens(ctx, ctx.zh_gens);
}

Perm lift_L1(SectionContext const &ctx, AutPair const &pair)
{
  std::vector<Element> targets;
  for (std::size_t c = 0; c < ctx.cosets_h.count(); ++c)
    targets.push_back(ctx.cosets_h.rep(pair.alpha[static_cast<Point>(c)]));
  return lift_with(ctx, pair, targets);
}

namespace
{

std::optional<std::vector<Element>> l2_targets(SectionContext const &ctx,
                                               AutPair const &pair)
{
  auto const bi = beta_inverse(pair.beta);
  std::vector<Element> targets;
  for (std::size_t c = 0; c < ctx.cosets_h.count(); ++c) {
    Perm want = conjugate_inn(pair.beta, bi, ctx.inn[ctx.cosets_h.rep(c)]);
    auto const &image = ctx.cosets_h.blocks[pair.alpha[static_cast<Point>(c)]];
    auto it = std::find_if(image.begin(), image.end(),
                           [&](Element b) { return ctx.inn[b] == want; });
    if (it == image.end())
      return std::nullopt;
    targets.push_back(*it);
  }
  return targets;
}

} // namespace

bool l2_condition(SectionContext const &ctx, AutPair const &pair)
{
  return l2_targets(ctx, pair).has_value();
}

Perm lift_L2(SectionContext const &ctx, AutPair const &pair)
{
  auto targets = l2_targets(ctx, pair);
  if (!targets)
    throw ContractError("lift_L2: pair violates the inn_H compatibility");
  return lift_with(ctx, pair, *targets);
}

bool left_law(SectionContext const &ctx, Perm const &gamma)
{
  for (Element h : ctx.h.elements())
    for (Element x = 0; x < ctx.g.order(); ++x)
      if (gamma[ctx.g.mul(h, x)] != ctx.g.mul(gamma[h], gamma[x]))
        return false;
  return true;
}

bool two_sided_law(SectionContext const &ctx, Perm const &gamma)
{
  if (!left_law(ctx, gamma))
    return false;
  for (Element h : ctx.h.elements())
    for (Element x = 0; x < ctx.g.order(); ++x)
      if (gamma[ctx.g.mul(x, h)] != ctx.g.mul(gamma[x], gamma[h]))
        return false;
  return true;
}

PermGroup build_L1_hat(SectionContext const &ctx, PermGroup const &a_in,
                       PermGroup const &b_in)
{
  PermGroup const a = ensure_witness(a_in), b = ensure_witness(b_in);
  Perm const ida(a.degree()), idb(b.degree());
  auto lifts = [&](std::vector<Perm> const &ag, std::vector<Perm> const &bg) {
    std::vector<Perm> res = ker_L1_generators(ctx);
    for (auto const &x : ag)
      res.push_back(lift_L1(ctx, {x, idb}));
    for (auto const &y : bg)
      res.push_back(lift_L1(ctx, {ida, y}));
    return res;
  };
  PermGroup lhat(ctx.g.order(), lifts(a.generators(), b.generators()));
  if (!is_solvable(ctx.g, ctx.h))
    return lhat.with_trivial_witness();
  PermGroup rad(ctx.g.order(), lifts(a.witness()->subgroup_gens(),
                                     b.witness()->subgroup_gens()));
  return lhat.with_witness(
    SolvableWitness{std::make_shared<PermGroup const>(std::move(rad)),
                    a.witness()->index_bound * b.witness()->index_bound});
}

PermGroup step1_stabilize_HC(SectionContext const &ctx, PermGroup const &a)
{
  PermGroup const aw = ensure_witness(a);
  if (ctx.hc.order() == ctx.g.order() || ctx.hc.order() == ctx.h.order())
    return aw;
  std::vector<Point> delta;
  for (std::size_t c = 0; c < ctx.cosets_h.count(); ++c)
    if (ctx.hc_of_coset[c] == 0)
      delta.push_back(static_cast<Point>(c));
  return set_stabilizer(aw, delta);
}

PermGroup step2_normalize_inn(SectionContext const &ctx, PermGroup const &b,
                              std::optional<std::vector<Perm>> const &quotient_auts)
{
  PermGroup const bw = ensure_witness(b);
  if (ctx.hc.order() == ctx.g.order())
    return bw;
  if (quotient_auts) {
    PermGroup res = inn_normalizer(ctx, bw, *quotient_auts);
    auto const &w = *bw.witness();
    PermGroup rad = w.index_bound == 1 && w.subgroup->order() == bw.order()
                      ? res
                      : inn_normalizer(ctx, w.subgroup->with_self_witness(),
                                       *quotient_auts);
    return res.with_witness(SolvableWitness{
      std::make_shared<PermGroup const>(std::move(rad)), w.index_bound});
  }
  BigInt const cap = BigInt(ctx.h.order()) * ctx.h.order();
  if (bw.order() > cap)
    throw ContractError("step 2: Aut(G/HC) not supplied and |B| > |H|^2");
  std::vector<Perm> keep;
  for (auto const &beta : bw.elements())
    if (normalizes_inn(ctx, beta))
      keep.push_back(beta);
  return group_from_elements(bw.degree(), keep);
}

PermGroup step3_match(SectionContext const &ctx, PermGroup const &a,
                      PermGroup const &b)
{
  PermGroup const ab = direct_product(ensure_witness(a), ensure_witness(b));
  if (ctx.hc.order() == ctx.g.order())
    return ab;
  MatchAction act(ctx);
  std::size_t const m = ctx.cosets_hc.count();
  std::vector<Point> diag;
  for (std::size_t i = 0; i < m; ++i)
    diag.push_back(static_cast<Point>(i * m + i));
  return set_stabilizer(ab, act, diag);
}

PermGroup build_L2_hat(SectionContext const &ctx, PermGroup const &m)
{
  std::size_t const dq = ctx.cosets_h.count();
  auto lifts = [&](std::vector<Perm> const &gens) {
    std::vector<Perm> res = ker_L2_generators(ctx);
    for (auto const &x : gens) {
      auto [alpha, beta] = split(x, dq);
      res.push_back(lift_L2(ctx, {alpha, beta}));
    }
    return res;
  };
  PermGroup const mw = ensure_witness(m);
  PermGroup lhat(ctx.g.order(), lifts(mw.generators()));
  PermGroup rad(ctx.g.order(), lifts(mw.witness()->subgroup_gens()));
  return lhat.with_witness(SolvableWitness{
    std::make_shared<PermGroup const>(std::move(rad)),
    mw.witness()->index_bound});
}

PermGroup step5_cut_to_aut(SectionContext const &ctx, PermGroup const &lhat)
{
  std::size_t const n = ctx.g.order();
  TupleAction triples(n, 3);
  std::vector<Point> graph;
  graph.reserve(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      graph.push_back(static_cast<Point>((a * n + b) * n + ctx.g.mul(a, b)));
  PermGroup res = set_stabilizer(ensure_witness(lhat), triples, graph);
  for (auto const &x : res.generators())
    if (!is_automorphism(ctx.g, x))
      throw ContractError("step 5 produced a non-multiplicative generator");
  return res;
}

StageTimes &stage_times()
{
  thread_local StageTimes t;
  return t;
}

PermGroup autlifting(SectionContext const &ctx, PermGroup const &a,
                     PermGroup const &b, Variant variant,
                     std::optional<std::vector<Perm>> quotient_auts,
                     Step2Mode mode)
{
  auto &times = stage_times();
  auto timed = [](double &slot, auto &&f) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    slot += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
    return r;
  };
  if (variant == Variant::L1) {
    PermGroup const hat = timed(times.hat, [&] { return build_L1_hat(ctx, a, b); });
    return timed(times.step5, [&] { return step5_cut_to_aut(ctx, hat); });
  }
  PermGroup const a1 = timed(times.step1, [&] { return step1_stabilize_HC(ctx, a); });
  PermGroup const b1 = timed(times.step2, [&] {
    if (mode == Step2Mode::FilterB)
      quotient_auts.reset();
    else if (!quotient_auts && ctx.hc.order() != ctx.g.order())
      quotient_auts = list_automorphisms(ctx.q_hc);
    return step2_normalize_inn(ctx, b, quotient_auts);
  });
  PermGroup const m = timed(times.step3, [&] { return step3_match(ctx, a1, b1); });
  PermGroup const hat = timed(times.hat, [&] { return build_L2_hat(ctx, m); });
  return timed(times.step5, [&] { return step5_cut_to_aut(ctx, hat); });
}

} // namespace csiso
