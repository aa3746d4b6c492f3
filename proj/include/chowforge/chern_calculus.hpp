#pragma once

// Chern classes of line bundles and principal-parts bundles on products of
// P^1-bundles P(V_i) -> BGL2, projective-bundle pushforward, and pullback
// along the sections of P(V) -> BGL2.

#include <map>
#include <string>
#include <vector>

#include "chowforge/graded_ring.hpp"

namespace chowforge {

/// How the relative cotangent bundle of P(V) is written in terms of the
/// fiber class z = c1(O(1)). kEulerSequence: -2z - c1(V). kTwistFree: -2z,
/// i.e. Omega = O(-2), the form used when det V has been trivialized.
enum class CotangentConvention { kEulerSequence, kTwistFree };

const char* convention_name(CotangentConvention c);

struct FiberFactor {
  std::string fiber;  // class of O_{P(V)}(1), degree 1
  std::string c1;     // c1(V), degree 1
  std::string c2;     // c2(V), degree 2
  CotangentConvention convention = CotangentConvention::kEulerSequence;
};

/// A product of P^1-bundles over a common classifying space. Every fiber
/// class satisfies fiber^2 + c1*fiber + c2 = 0; the base generators are the
/// c1/c2 of each factor plus any extra spectator classes.
class ProjBundleCtx {
 public:
  ProjBundleCtx(std::vector<FiberFactor> factors, std::vector<Generator> extra = {});

  /// P(V) over BGL2 with generators z, c1, c2.
  static ProjBundleCtx standard(CotangentConvention c = CotangentConvention::kEulerSequence);
  /// P(V) x P(W) with generators (extra..., z, w, c1, c2, d1, d2).
  static ProjBundleCtx two_factor(CotangentConvention c, std::vector<Generator> extra = {});

  const RingPresentation& ring() const { return ring_; }
  const GeneratorSetPtr& generators() const { return ring_.generators(); }
  const std::vector<FiberFactor>& factors() const { return factors_; }
  const FiberFactor& factor(std::size_t i) const;
  RingElement var(const std::string& name) const { return ring_.var(name); }
  RingElement parse(const std::string& text) const { return ring_.parse(text); }
  RingElement normal_form(const RingElement& e) const { return ring_.normal_form(e); }

 private:
  std::vector<FiberFactor> factors_;
  RingPresentation ring_;
};

struct LineClass {
  RingElement c1;
};

/// Which factor the jets are taken along, for a two-factor context.
enum class Direction { kHorizontal, kVertical };

/// Principal parts of order `order` of N = O(twist_degree) along the chosen
/// factor, tensored with O(other_twist) from the other factor when present.
struct JetSpec {
  RatFunc twist_degree;
  int order = 0;
  Direction direction = Direction::kHorizontal;
  RatFunc other_twist = RatFunc();
};

LineClass relative_cotangent_class(const ProjBundleCtx& ctx, std::size_t factor = 0);

/// c1 of the twisting bundle N of a jet specification.
LineClass twist_class(const JetSpec& spec, const ProjBundleCtx& ctx);

/// c1(N (x) Omega^k), the k-th graded piece of the principal-parts filtration.
LineClass jet_graded_piece(const JetSpec& spec, const ProjBundleCtx& ctx, const RatFunc& k);

/// The factors 1 + c1(N (x) Omega^k), k = 0..order, unreduced.
std::vector<RingElement> jet_filtration_factors(const JetSpec& spec, const ProjBundleCtx& ctx);

/// Total and top Chern class of the principal-parts bundle, in normal form.
RingElement jet_total_chern(const JetSpec& spec, const ProjBundleCtx& ctx);
RingElement jet_top_chern(const JetSpec& spec, const ProjBundleCtx& ctx);

/// pi_* along the given factor: the coefficient of its fiber class. The
/// input must be in normal form (fiber exponent <= 1); throws NotReduced.
RingElement pushforward_p1(const RingElement& e, const ProjBundleCtx& ctx, std::size_t factor = 0);

/// Pullback along the sections: each fiber class goes to minus its c1.
std::map<std::string, RingElement> section_pullbacks(const ProjBundleCtx& ctx);
RingElement pull_back_to_section(const RingElement& e, const ProjBundleCtx& ctx);

}  // namespace chowforge
