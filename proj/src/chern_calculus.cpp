#include "chowforge/chern_calculus.hpp"

#include "chowforge/error.hpp"

namespace chowforge {

const char* convention_name(CotangentConvention c) {
  return c == CotangentConvention::kEulerSequence ? "euler_sequence" : "twist_free";
}

namespace {

RingPresentation build_ring(const std::vector<FiberFactor>& factors, const std::vector<Generator>& extra) {
  // Fibers are declared before base classes so that fiber^2 leads each
  // quadratic relation.
  std::vector<Generator> gens = extra;
  for (const auto& f : factors) gens.push_back({f.fiber, 1});
  for (const auto& f : factors) {
    bool seen = false;
    for (const auto& g : gens) seen = seen || g.name == f.c1;
    if (!seen) {
      gens.push_back({f.c1, 1});
      gens.push_back({f.c2, 2});
    }
  }
  GeneratorSetPtr set = make_generators(gens);
  std::vector<RingElement> rels;
  for (const auto& f : factors) {
    RingElement z = RingElement::var(set, f.fiber);
    rels.push_back(z * z + RingElement::var(set, f.c1) * z + RingElement::var(set, f.c2));
  }
  return ring_define(set, rels);
}

}  // namespace

ProjBundleCtx::ProjBundleCtx(std::vector<FiberFactor> factors, std::vector<Generator> extra)
    : factors_(std::move(factors)), ring_(build_ring(factors_, extra)) {}

ProjBundleCtx ProjBundleCtx::standard(CotangentConvention c) {
  return ProjBundleCtx({{"z", "c1", "c2", c}});
}

ProjBundleCtx ProjBundleCtx::two_factor(CotangentConvention c, std::vector<Generator> extra) {
  return ProjBundleCtx({{"z", "c1", "c2", c}, {"w", "d1", "d2", c}}, std::move(extra));
}

const FiberFactor& ProjBundleCtx::factor(std::size_t i) const {
  if (i >= factors_.size()) throw Error(ErrorCode::kBadIndex, "no fiber factor " + std::to_string(i));
  return factors_[i];
}

LineClass relative_cotangent_class(const ProjBundleCtx& ctx, std::size_t factor) {
  const FiberFactor& f = ctx.factor(factor);
  RingElement omega = RatFunc(-2) * ctx.var(f.fiber);
  if (f.convention == CotangentConvention::kEulerSequence) omega -= ctx.var(f.c1);
  return {omega};
}

namespace {

std::pair<std::size_t, std::size_t> jet_factors(const JetSpec& spec, const ProjBundleCtx& ctx) {
  std::size_t along = spec.direction == Direction::kHorizontal ? 0 : 1;
  if (along >= ctx.factors().size())
    throw Error(ErrorCode::kBadIndex, "vertical jets need a two-factor context");
  return {along, 1 - along};
}

}  // namespace

LineClass twist_class(const JetSpec& spec, const ProjBundleCtx& ctx) {
  auto [along, other] = jet_factors(spec, ctx);
  RingElement c = spec.twist_degree * ctx.var(ctx.factor(along).fiber);
  if (!spec.other_twist.is_zero()) {
    if (other >= ctx.factors().size())
      throw Error(ErrorCode::kBadIndex, "other_twist needs a two-factor context");
    c += spec.other_twist * ctx.var(ctx.factor(other).fiber);
  }
  return {c};
}

LineClass jet_graded_piece(const JetSpec& spec, const ProjBundleCtx& ctx, const RatFunc& k) {
  auto [along, other] = jet_factors(spec, ctx);
  (void)other;
  return {twist_class(spec, ctx).c1 + k * relative_cotangent_class(ctx, along).c1};
}

std::vector<RingElement> jet_filtration_factors(const JetSpec& spec, const ProjBundleCtx& ctx) {
  if (spec.order < 0) throw Error(ErrorCode::kBadIndex, "negative jet order");
  RingElement one = RingElement::constant(ctx.generators(), RatFunc(1));
  std::vector<RingElement> out;
  for (int k = 0; k <= spec.order; ++k) out.push_back(one + jet_graded_piece(spec, ctx, RatFunc(k)).c1);
  return out;
}

RingElement jet_total_chern(const JetSpec& spec, const ProjBundleCtx& ctx) {
  RingElement total = RingElement::constant(ctx.generators(), RatFunc(1));
  for (const auto& f : jet_filtration_factors(spec, ctx)) total = ctx.normal_form(total * f);
  return total;
}

RingElement jet_top_chern(const JetSpec& spec, const ProjBundleCtx& ctx) {
  return jet_total_chern(spec, ctx).homogeneous_part(spec.order + 1);
}

RingElement pushforward_p1(const RingElement& e, const ProjBundleCtx& ctx, std::size_t factor) {
  const std::string& fiber = ctx.factor(factor).fiber;
  std::size_t idx = ctx.generators()->index_of(fiber);
  RingElement out(ctx.generators());
  for (const auto& [ex, c] : e.terms()) {
    if (ex[idx] > 1) throw Error(ErrorCode::kNotReduced, fiber + "^" + std::to_string(ex[idx]) + " in pushforward input");
    if (ex[idx] == 1) {
      Exponents base = ex;
      base[idx] = 0;
      out.add_term(base, c);
    }
  }
  return out;
}

std::map<std::string, RingElement> section_pullbacks(const ProjBundleCtx& ctx) {
  std::map<std::string, RingElement> images;
  for (const auto& f : ctx.factors()) images.emplace(f.fiber, -ctx.var(f.c1));
  return images;
}

RingElement pull_back_to_section(const RingElement& e, const ProjBundleCtx& ctx) {
  return e.substitute(section_pullbacks(ctx), ctx.generators());
}

}  // namespace chowforge
