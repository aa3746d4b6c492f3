#include "chowforge/scenarios.hpp"

#include "chowforge/error.hpp"

namespace chowforge {

Genus Genus::value(long g0) {
  Genus out;
  out.value_ = g0;
  return out;
}

RatFunc Genus::g() const { return is_symbolic() ? RatFunc::g() : RatFunc(*value_); }

std::string Genus::label() const { return is_symbolic() ? "symbolic" : std::to_string(*value_); }

RingElement Genus::adapt(const RingElement& e) const { return is_symbolic() ? e : e.specialize(*value_); }

RatFunc Genus::adapt(const RatFunc& c) const { return is_symbolic() ? c : RatFunc(c.eval(*value_)); }

const NamedPresentation& PresentationReport::presentation(const std::string& name) const {
  for (const auto& p : presentations)
    if (p.name == name) return p;
  throw Error(ErrorCode::kBadIndex, "no presentation " + name);
}

const DerivedRelation& PresentationReport::relation(const std::string& label) const {
  for (const auto& r : derived_relations)
    if (r.label == label) return r;
  throw Error(ErrorCode::kBadIndex, "no derived relation " + label);
}

const Check* PresentationReport::find_check(const std::string& claim_id) const {
  for (const auto& c : checks)
    if (c.claim_id == claim_id) return &c;
  return nullptr;
}

bool PresentationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

RatFunc parse_coefficient(const std::string& text) {
  static const GeneratorSetPtr kNone = make_generators({});
  return parse_element(kNone, text).coefficient(Exponents{});
}

void expect_element(PresentationReport& r, const Genus& genus, const std::string& id, const RingElement& actual,
                    const std::string& expected_text) {
  RingElement expected = genus.adapt(parse_element(actual.generators(), expected_text));
  r.checks.push_back({id, expected.to_string(), actual.to_string(), expected == actual});
}

void expect_coefficient(PresentationReport& r, const Genus& genus, const std::string& id, const RatFunc& actual,
                        const std::string& expected_text) {
  RatFunc expected = genus.adapt(parse_coefficient(expected_text));
  r.checks.push_back({id, expected.to_string(), actual.to_string(), expected == actual});
}

void expect_true(PresentationReport& r, const std::string& id, bool ok, const std::string& expected = "true",
                 const std::string& actual_if_false = "false") {
  r.checks.push_back({id, expected, ok ? expected : actual_if_false, ok});
}

std::string dims_text(const std::vector<int>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "]";
}

void expect_dims(PresentationReport& r, const std::string& id, const NamedPresentation& p,
                 const std::vector<int>& expected) {
  r.checks.push_back({id, dims_text(expected), dims_text(p.graded_dims), p.graded_dims == expected});
}

NamedPresentation present(std::string name, RingPresentation ring, int max_degree) {
  std::vector<int> dims;
  for (int d = 0; d <= max_degree; ++d) dims.push_back(ring.graded_component_dim(d));
  return {std::move(name), std::move(ring), std::move(dims)};
}

// Inverse of a coefficient that a "nonzero multiple" step divides by. At a
// fixed genus a vanishing coefficient is a pole of the derivation; for
// symbolic g we record that it has no zero at any genus g >= 2.
RatFunc checked_inverse(PresentationReport& r, const Genus& genus, const RatFunc& c, const std::string& what) {
  if (c.is_zero()) throw Error(ErrorCode::kPoleAtPoint, what + " vanishes at g = " + genus.label());
  if (genus.is_symbolic()) {
    int roots = sturm_roots_geq(c.num(), 2);
    r.checks.push_back({"nonvanishing." + what, "0 real zeros in [2, inf)", std::to_string(roots) + " real zeros in [2, inf)",
                        roots == 0});
  }
  return c.inverse();
}

// Presentation-level bookkeeping shared by every scenario: each derived
// relation must vanish in the presentation it is attached to, and every
// presentation must carry a verified Groebner basis.
void self_consistency(PresentationReport& r) {
  bool ok = true;
  std::string bad;
  for (const auto& d : r.derived_relations) {
    if (!r.presentation(d.presentation).ring.is_zero(d.relation)) {
      ok = false;
      bad = d.label;
    }
  }
  expect_true(r, "self_consistency.derived_relations_vanish", ok, "true", "false: " + bad);
  bool certified = true;
  for (const auto& p : r.presentations) certified = certified && p.ring.certify();
  expect_true(r, "self_consistency.groebner_certified", certified);
}

// Everything about I_{g,0} that later scenarios reuse.
struct ZeroPoint {
  ProjBundleCtx ctx = ProjBundleCtx::standard();
  RingElement c3, firstp, secondp, rel1, dclass, d11;
  RatFunc rho;    // c2 = rho * c1^2
  RatFunc gamma;  // secondp = gamma * c1^3 after substituting c2
  RatFunc kappa;  // delta = kappa * c1
};

ZeroPoint zero_point(PresentationReport& r, const Genus& genus) {
  ZeroPoint z;
  const RatFunc g = genus.g();
  const RatFunc degree = RatFunc(2) * g + RatFunc(2);
  z.c3 = jet_top_chern({degree, 2}, z.ctx);
  z.firstp = pushforward_p1(z.c3, z.ctx);
  z.secondp = pushforward_p1(z.ctx.normal_form(z.c3 * z.ctx.var("z")), z.ctx);
  z.rel1 = jet_top_chern({degree, 1}, z.ctx);
  z.dclass = pushforward_p1(z.rel1, z.ctx);
  z.d11 = jet_top_chern({degree, 0}, z.ctx);

  RatFunc alpha = z.firstp.coefficient({"c1", "c1"});
  RatFunc beta = z.firstp.coefficient({"c2"});
  z.rho = -(alpha * checked_inverse(r, genus, beta, "c2_coefficient_of_pushforward_c3"));
  z.gamma = z.secondp.coefficient({"c1", "c1", "c1"}) + z.secondp.coefficient({"c1", "c2"}) * z.rho;
  checked_inverse(r, genus, z.gamma, "c1_cubed_coefficient_after_substitution");
  z.kappa = z.dclass.coefficient({"c1"});
  checked_inverse(r, genus, z.kappa, "delta_class_coefficient");
  return z;
}

// Images of c1 and c2 in terms of delta, inverting delta = kappa*c1 and
// c2 = rho*c1^2.
std::map<std::string, RingElement> base_in_delta(const ZeroPoint& z, const GeneratorSetPtr& target) {
  RingElement delta = RingElement::var(target, "delta");
  RatFunc inv = z.kappa.inverse();
  return {{"c1", inv * delta}, {"c2", (z.rho * inv * inv) * delta * delta}};
}

}  // namespace

EdidinHuClasses edidin_hu_classes(const GeneratorSetPtr& gens, const Genus& genus, int i, int j) {
  if (i < 1 || j < 1 || i == j) throw Error(ErrorCode::kBadIndex, "Edidin-Hu classes need distinct indices >= 1");
  const RatFunc g = genus.g();
  const RatFunc one(1);
  if (g == one) throw Error(ErrorCode::kPoleAtPoint, "Edidin-Hu classes at g = 1");
  RingElement psi_i = RingElement::var(gens, "psi" + std::to_string(i));
  RingElement psi_j = RingElement::var(gens, "psi" + std::to_string(j));
  RingElement delta = RingElement::var(gens, "delta");
  RatFunc gm1_inv = (g - one).inverse();
  RatFunc delta_coeff = -((RatFunc(2) * (RatFunc(2) * g + one) * (g - one)).inverse());
  return {gm1_inv * (psi_i + psi_j) + delta_coeff * delta, ((g + one) * gm1_inv) * psi_i + delta_coeff * delta};
}

PresentationReport scenario_I_g0(const Genus& genus) {
  PresentationReport r{"i_g0", genus.label(), std::nullopt, {}, {}, {}, {}};
  ZeroPoint z = zero_point(r, genus);

  expect_element(r, genus, "pushforward_c3", z.firstp, "(8*g^3+12*g^2+4*g)*c1^2+(-8*g^3+8*g)*c2");
  expect_element(r, genus, "pushforward_c3_z", z.secondp, "(-8*g^3-12*g^2-4*g)*c1^3+(16*g^3+12*g^2-8*g-4)*c1*c2");
  expect_element(r, genus, "delta_class", z.dclass, "(-4*g^2-6*g-2)*c1");
  r.values.push_back({"c2_over_c1_squared", z.rho.to_string()});
  r.values.push_back({"delta_over_c1", z.kappa.to_string()});

  GeneratorSetPtr base = make_generators({{"c1", 1}, {"c2", 2}});
  RingElement firstp = z.firstp.embed(base), secondp = z.secondp.embed(base);
  r.presentations.push_back(present("base", ring_define(base, {firstp, secondp}), 4));
  const RingPresentation B = r.presentations.back().ring;
  RingElement c1 = B.var("c1");
  expect_true(r, "c2_nonzero_multiple_of_c1_squared",
              B.is_zero(B.var("c2") - z.rho * c1 * c1) && !z.rho.is_zero());
  expect_true(r, "c1_cubed_vanishes", B.is_zero(c1.pow(3)));
  expect_dims(r, "base_graded_dims", r.presentations.back(), {1, 1, 1, 0, 0});

  GeneratorSetPtr out = make_generators({{"delta", 1}});
  auto images = base_in_delta(z, out);
  RingElement f = firstp.substitute(images, out), s = secondp.substitute(images, out);
  r.presentations.push_back(present("final", ring_define(out, {f, s}), 4));
  const RingPresentation& F = r.presentations.back().ring;
  RingElement delta = F.var("delta");
  r.derived_relations.push_back({"delta_cubed", "final", secondp, s});
  r.derived_relations.push_back({"pushforward_c3_in_delta", "final", firstp, f});
  expect_true(r, "delta_cubed_vanishes", F.is_zero(delta.pow(3)));
  expect_true(r, "delta_squared_nonzero", !F.is_zero(delta.pow(2)));
  expect_dims(r, "graded_dims", r.presentations.back(), {1, 1, 1, 0, 0});
  // Change of variables round trip: delta maps back to kappa*c1 and the
  // delta relations pull back into the base ideal.
  std::map<std::string, RingElement> back{{"delta", z.kappa * c1}};
  bool round_trip = true;
  for (const auto& rel : F.groebner_basis()) round_trip = round_trip && B.is_zero(rel.substitute(back, base));
  expect_true(r, "change_of_variables_certified", round_trip);
  self_consistency(r);
  return r;
}

namespace {

struct OnePointDerivation {
  RingElement pbtrel, rel1;  // in (z, delta)
  RingElement r1, r2;        // in (psi1, delta), normalized
  RatFunc r_const, a_g;
};

OnePointDerivation derive_one_point(PresentationReport& r, const Genus& genus, const ZeroPoint& z) {
  OnePointDerivation d;
  const RatFunc g = genus.g();
  GeneratorSetPtr zd = make_generators({{"z", 1}, {"delta", 1}});
  auto images = base_in_delta(z, zd);
  d.pbtrel = z.ctx.parse("z^2 + c1*z + c2").substitute(images, zd);
  d.rel1 = z.rel1.substitute(images, zd);

  GeneratorSetPtr out = make_generators({{"psi1", 1}, {"delta", 1}});
  // D11 = lambda*z and D11 = d_ii, so z = d_ii / lambda.
  RatFunc lambda = z.d11.coefficient({"z"});
  RatFunc lambda_inv = checked_inverse(r, genus, lambda, "fiber_coefficient_of_D11");
  (void)g;
  GeneratorSetPtr eh_gens = make_generators({{"psi1", 1}, {"psi2", 1}, {"delta", 1}});
  RingElement dii = edidin_hu_classes(eh_gens, genus, 1, 2).d_ii.embed(out);
  std::map<std::string, RingElement> z_image{{"z", lambda_inv * dii}};

  RingElement r1 = d.rel1.substitute(z_image, out);
  RatFunc lead = r1.coefficient({"delta", "psi1"});
  r1 = checked_inverse(r, genus, lead, "delta_psi1_coefficient") * r1;
  d.r1 = r1;
  d.r_const = r1.coefficient({"delta", "delta"});

  RingElement r2 = d.pbtrel.substitute(z_image, out);
  r2 = r2 - r2.coefficient({"delta", "psi1"}) * r1;
  RatFunc sq = r2.coefficient({"psi1", "psi1"});
  r2 = checked_inverse(r, genus, sq, "psi1_squared_coefficient") * r2;
  d.r2 = r2;
  d.a_g = r2.coefficient({"delta", "delta"});
  return d;
}

}  // namespace

OnePointRelations one_point_relations(const Genus& genus) {
  PresentationReport scratch;
  ZeroPoint z = zero_point(scratch, genus);
  OnePointDerivation d = derive_one_point(scratch, genus, z);
  return {d.r_const, d.a_g};
}

PresentationReport scenario_I_g1(const Genus& genus) {
  PresentationReport r{"i_g1", genus.label(), std::nullopt, {}, {}, {}, {}};
  ZeroPoint z = zero_point(r, genus);
  OnePointDerivation d = derive_one_point(r, genus, z);

  expect_element(r, genus, "diagonal_class_in_c", z.rel1, "((-4*g^2-6*g-2)*c1)*z+(-4*g^2-4*g)*c2");
  expect_element(r, genus, "marked_point_divisor_class", z.d11, "(2*g+2)*z");
  // Coefficient-level comparison of the projective bundle relation first, so
  // a mismatch is localized to the term that differs.
  expect_coefficient(r, genus, "projective_bundle_relation.delta_z", d.pbtrel.coefficient({"delta", "z"}),
                     "-1/(2*(2*g+1)*(g+1))");
  expect_coefficient(r, genus, "projective_bundle_relation.delta_squared", d.pbtrel.coefficient({"delta", "delta"}),
                     "-1/(8*(2*g+1)*(g-1)*(g+1)^2)");
  expect_element(r, genus, "projective_bundle_relation", d.pbtrel,
                 "z^2 - 1/(2*(2*g+1)*(g+1))*delta*z - 1/(8*(2*g+1)*(g-1)*(g+1)^2)*delta^2");
  expect_coefficient(r, genus, "diagonal_class_in_delta.delta_z", d.rel1.coefficient({"delta", "z"}), "1");
  expect_coefficient(r, genus, "diagonal_class_in_delta.delta_squared", d.rel1.coefficient({"delta", "delta"}),
                     "g/(2*(2*g+1)*(g-1)*(g+1))");
  expect_element(r, genus, "diagonal_class_in_delta", d.rel1, "delta*z + g/(2*(2*g+1)*(g-1)*(g+1))*delta^2");
  expect_element(r, genus, "relation_delta_psi1", d.r1, "delta*psi1 + (2*g-1)*delta^2");
  expect_coefficient(r, genus, "a_g", d.a_g, "(16*g^4-24*g^3+16*g^2+8*g-3)/(4*(2*g+1)^2*(g+1)^2)");
  r.values.push_back({"delta_psi1_relation_constant", d.r_const.to_string()});
  r.values.push_back({"a_g", d.a_g.to_string()});

  GeneratorSetPtr zd = d.pbtrel.generators();
  RingElement delta_zd = RingElement::var(zd, "delta");
  r.presentations.push_back(present("projective_bundle", ring_define(zd, {d.pbtrel, d.rel1, delta_zd.pow(3)}), 4));

  GeneratorSetPtr out = d.r1.generators();
  RingElement delta = RingElement::var(out, "delta");
  r.presentations.push_back(present("final", ring_define(out, {d.r1, d.r2, delta.pow(3)}), 4));
  r.derived_relations.push_back({"projective_bundle_relation", "projective_bundle", z.ctx.parse("z^2 + c1*z + c2"), d.pbtrel});
  r.derived_relations.push_back({"diagonal_class", "projective_bundle", z.rel1, d.rel1});
  r.derived_relations.push_back({"relation_delta_psi1", "final", d.rel1, d.r1});
  r.derived_relations.push_back({"relation_psi1_squared", "final", d.pbtrel, d.r2});
  r.derived_relations.push_back({"delta_cubed", "final", delta_zd.pow(3), delta.pow(3)});

  const NamedPresentation& fin = r.presentations.back();
  expect_dims(r, "graded_dims", fin, {1, 2, 1, 0, 0});
  // delta^3 = 0 must agree with the zero-pointed computation.
  PresentationReport zero = scenario_I_g0(genus);
  RingElement delta0 = zero.final_presentation().ring.var("delta");
  expect_true(r, "delta_cubed_agrees_with_zero_points",
              zero.final_presentation().ring.is_zero(delta0.pow(3)) && fin.ring.is_zero(delta.pow(3)));
  self_consistency(r);
  return r;
}

namespace {

void require_n(int n, int lo, const char* what) {
  if (n < lo) throw Error(ErrorCode::kBadN, std::string(what) + " needs n >= " + std::to_string(lo));
}

RingPresentation wn_presentation(int n, const Genus& genus, CotangentConvention conv, const ZeroPoint& z,
                                 RingElement* tangency_1) {
  std::vector<FiberFactor> factors;
  for (int i = 1; i <= n; ++i) factors.push_back({"z" + std::to_string(i), "c1", "c2", conv});
  ProjBundleCtx ctx(factors);
  GeneratorSetPtr gens = ctx.generators();
  std::vector<RingElement> rels = ctx.ring().relations();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rels.push_back(ctx.parse("z" + std::to_string(i) + " + z" + std::to_string(j) + " + c1"));
  const RatFunc degree = RatFunc(2) * genus.g() + RatFunc(2);
  for (int i = 1; i <= n; ++i) {
    // The excised tangency locus X_i is cut out by the first-order part of
    // the evaluation at the i-th point.
    ProjBundleCtx single({{"z" + std::to_string(i), "c1", "c2", conv}});
    RingElement cls = jet_graded_piece({degree, 1}, single, RatFunc(1)).c1.embed(gens);
    if (i == 1 && tangency_1) *tangency_1 = cls;
    rels.push_back(cls);
  }
  rels.push_back(z.firstp.embed(gens));
  rels.push_back(z.secondp.embed(gens));
  return ring_define(gens, rels);
}

}  // namespace

PresentationReport scenario_Wn(int n, const Genus& genus) {
  require_n(n, 2, "W_n");
  PresentationReport r{"w_n", genus.label(), n, {}, {}, {}, {}};
  if (!genus.is_symbolic() && n > 2 * genus.integer() + 2)
    throw Error(ErrorCode::kBadN, "W_n needs n <= 2g+2");
  r.values.push_back({"n_bound", "n <= 2g+2"});
  ZeroPoint z = zero_point(r, genus);

  RingElement tangency;
  const int top = 4;
  r.presentations.push_back(present("final", wn_presentation(n, genus, CotangentConvention::kTwistFree, z, &tangency), top));
  const NamedPresentation& fin = r.presentations.back();
  expect_element(r, genus, "tangency_locus_class", tangency, "2*g*z1");
  std::vector<int> expected(top + 1, 0);
  expected[0] = 1;
  expect_dims(r, "graded_dims", fin, expected);
  bool gens_vanish = true;
  for (const auto& gen : fin.ring.generators()->generators())
    gens_vanish = gens_vanish && fin.ring.is_zero(fin.ring.var(gen.name));
  expect_true(r, "generators_vanish", gens_vanish);
  for (int i = 1; i <= n; ++i) {
    RingElement zi = fin.ring.var("z" + std::to_string(i));
    r.derived_relations.push_back({"z" + std::to_string(i), "final", zi, zi});
  }
  r.derived_relations.push_back({"c1", "final", fin.ring.var("c1"), fin.ring.var("c1")});

  RingElement euler_tangency;
  NamedPresentation euler = present("euler_sequence_variant",
                                    wn_presentation(n, genus, CotangentConvention::kEulerSequence, z, &euler_tangency), top);
  expect_dims(r, "graded_dims_euler_sequence_variant", euler, expected);
  r.values.push_back({"tangency_locus_class_euler_sequence", euler_tangency.to_string()});
  r.presentations.insert(r.presentations.begin(), std::move(euler));
  self_consistency(r);
  return r;
}

namespace {

struct A1Branch {
  std::string name;
  RatFunc e;
};

}  // namespace

PresentationReport scenario_A1_vanishing(int n, const Genus& genus) {
  require_n(n, 1, "A^1 vanishing");
  PresentationReport r{"a1_vanishing", genus.label(), n, {}, {}, {}, {}};
  ZeroPoint z = zero_point(r, genus);
  const RatFunc g = genus.g();
  r.values.push_back({"n_bound", "n <= 2g+6"});
  if (!genus.is_symbolic())
    expect_true(r, "n_within_bound", n <= 2 * genus.integer() + 6, "true", "false: n > 2g+6");

  std::vector<A1Branch> branches;
  if (genus.is_symbolic()) {
    branches.push_back({"n_le_g", g - RatFunc(n - 1)});
    branches.push_back({"n_ge_g_plus_1", RatFunc(0)});
  } else if (n <= genus.integer()) {
    branches.push_back({"n_le_g", RatFunc(genus.integer() - n + 1)});
  } else {
    branches.push_back({"n_ge_g_plus_1", RatFunc(0)});
  }

  for (auto conv : {CotangentConvention::kEulerSequence, CotangentConvention::kTwistFree}) {
    const bool primary = conv == CotangentConvention::kTwistFree;
    ProjBundleCtx ctx = ProjBundleCtx::two_factor(conv, {{"zeta", 1}});
    GeneratorSetPtr out = make_generators({{"zeta", 1}, {"c1", 1}, {"d1", 1}, {"c2", 2}, {"d2", 2}});
    for (const auto& b : branches) {
      const std::string tag = primary ? b.name : b.name + ".euler_sequence_variant";
      RingElement zeta = ctx.var("zeta");
      // Equations vanishing to one order too high along the horizontal ruling.
      JetSpec horizontal{g + RatFunc(1), 0, Direction::kHorizontal, RatFunc(2)};
      RingElement pf1 = zeta + pull_back_to_section(jet_graded_piece(horizontal, ctx, b.e + RatFunc(1)).c1, ctx);
      // Equations tangent to the vertical ruling.
      JetSpec vertical{RatFunc(2), 1, Direction::kVertical, g + RatFunc(1)};
      RingElement pf2 = zeta + pull_back_to_section(jet_graded_piece(vertical, ctx, RatFunc(1)).c1, ctx);
      pf1 = pf1.embed(out);
      pf2 = pf2.embed(out);
      RingElement delta_rel = z.kappa * RingElement::var(out, "c1");
      if (primary) {
        RatFunc coeff = RatFunc(2) * b.e - g + RatFunc(1);
        RingElement expected1 = RingElement::var(out, "zeta") + coeff * RingElement::var(out, "c1") -
                                RatFunc(2) * RingElement::var(out, "d1");
        r.checks.push_back({"horizontal_excision_class." + b.name, expected1.to_string(), pf1.to_string(), pf1 == expected1});
        expect_element(r, genus, "vertical_excision_class." + b.name, pf2, "zeta - (g+1)*c1");
      } else {
        r.values.push_back({"horizontal_excision_class." + tag, pf1.to_string()});
        r.values.push_back({"vertical_excision_class." + tag, pf2.to_string()});
      }
      r.presentations.push_back(present(tag, ring_define(out, {delta_rel, pf1, pf2}), 1));
      const NamedPresentation& p = r.presentations.back();
      r.checks.push_back({"degree_one_dim." + tag, "0", std::to_string(p.graded_dims[1]), p.graded_dims[1] == 0});
      r.derived_relations.push_back({"delta_restricts_to_zero." + tag, tag, z.dclass, delta_rel});
      r.derived_relations.push_back({"horizontal_excision." + tag, tag, pf1, pf1});
      r.derived_relations.push_back({"vertical_excision." + tag, tag, pf2, pf2});
      for (const char* name : {"zeta", "c1", "d1"})
        r.derived_relations.push_back({std::string(name) + "." + tag, tag, p.ring.var(name), p.ring.var(name)});
    }
  }
  // Keep a primary branch as the final presentation.
  for (std::size_t i = 0; i < r.presentations.size(); ++i) {
    if (r.presentations[i].name == branches.front().name) {
      NamedPresentation keep = r.presentations[i];
      r.presentations.erase(r.presentations.begin() + static_cast<long>(i));
      r.presentations.push_back(std::move(keep));
      break;
    }
  }
  self_consistency(r);
  return r;
}

PresentationReport scenario_R2(int n, const Genus& genus) {
  require_n(n, 2, "R^2 bound");
  PresentationReport r{"r2", genus.label(), n, {}, {}, {}, {}};
  ZeroPoint z = zero_point(r, genus);
  OnePointDerivation one = derive_one_point(r, genus, z);
  r.values.push_back({"one_point_relations", one.r1.to_string() + ", " + one.r2.to_string()});

  std::vector<Generator> gv;
  for (int i = 1; i <= n; ++i) gv.push_back({"psi" + std::to_string(i), 1});
  gv.push_back({"delta", 1});
  GeneratorSetPtr gens = make_generators(gv);
  RingElement delta = RingElement::var(gens, "delta");

  std::vector<RingElement> rels{delta.pow(3)};
  for (int i = 1; i <= n; ++i) {
    // Pull the one-point relations back along the i-th forgetful map.
    std::map<std::string, RingElement> img{{"psi1", RingElement::var(gens, "psi" + std::to_string(i))}};
    rels.push_back(one.r1.substitute(img, gens));
    rels.push_back(one.r2.substitute(img, gens));
  }
  RingElement product_12;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      EdidinHuClasses eh = edidin_hu_classes(gens, genus, i, j);
      RingElement product = eh.d_ii * eh.d_ij;  // D_ii and D_ij are disjoint
      if (i == 1 && j == 2) product_12 = product;
      rels.push_back(product);
    }
  }
  expect_coefficient(r, genus, "psi_i_psi_j_coefficient", product_12.coefficient({"psi1", "psi2"}), "(g+1)/(g-1)^2");

  r.presentations.push_back(present("final", ring_define(gens, rels), 3));
  const NamedPresentation& fin = r.presentations.back();
  r.checks.push_back({"degree_two_dim_at_most_one", "<= 1", std::to_string(fin.graded_dims[2]), fin.graded_dims[2] <= 1});
  r.checks.push_back({"degree_three_dim", "0", std::to_string(fin.graded_dims[3]), fin.graded_dims[3] == 0});
  RingElement psi12 = fin.ring.normal_form(RingElement::var(gens, "psi1") * RingElement::var(gens, "psi2"));
  bool proportional = psi12.is_zero() || (psi12.size() == 1 && psi12.max_exponent("delta") == 2);
  r.checks.push_back({"psi1_psi2_proportional_to_delta_squared", "c*delta^2", psi12.to_string(), proportional});
  r.values.push_back({"psi1_psi2_normal_form", psi12.to_string()});
  r.derived_relations.push_back({"D11_D12", "final", product_12, product_12});
  self_consistency(r);
  return r;
}

}  // namespace chowforge
