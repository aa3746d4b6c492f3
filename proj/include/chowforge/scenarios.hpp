#pragma once

// End-to-end relation derivations for the strata of the hyperelliptic
// pointed moduli space, each producing a PresentationReport.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowforge/chern_calculus.hpp"

namespace chowforge {

/// Either the symbolic genus g or a fixed integer value.
class Genus {
 public:
  static Genus symbolic() { return Genus(); }
  static Genus value(long g0);

  bool is_symbolic() const { return !value_.has_value(); }
  long integer() const { return *value_; }
  /// g as an element of Q(g): the generator, or a constant.
  RatFunc g() const;
  std::string label() const;
  /// Specializes a symbolic expression when the genus is numeric.
  RingElement adapt(const RingElement& e) const;
  RatFunc adapt(const RatFunc& c) const;

 private:
  std::optional<long> value_;
};

struct Check {
  std::string claim_id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct NamedPresentation {
  std::string name;
  RingPresentation ring;
  std::vector<int> graded_dims;  // degrees 0..graded_dims.size()-1
};

struct DerivedRelation {
  std::string label;
  std::string presentation;  // name of the presentation it lives in
  RingElement raw;           // before the change of variables
  RingElement relation;      // in the presentation's generators
};

struct PresentationReport {
  std::string scenario_id;
  std::string genus;
  std::optional<int> n;
  std::vector<DerivedRelation> derived_relations;
  std::vector<NamedPresentation> presentations;  // the last one is final
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> values;

  const NamedPresentation& final_presentation() const { return presentations.back(); }
  const NamedPresentation& presentation(const std::string& name) const;
  const DerivedRelation& relation(const std::string& label) const;
  const Check* find_check(const std::string& claim_id) const;
  bool all_pass() const;
};

struct EdidinHuClasses {
  RingElement d_ij;
  RingElement d_ii;
};

/// Divisor classes of the loci where the i-th point collides with the
/// j-th point and with its own conjugate, in generators psi_i, psi_j, delta.
EdidinHuClasses edidin_hu_classes(const GeneratorSetPtr& gens, const Genus& genus, int i, int j);

/// The two generators of the relation ideal of I_{g,1} in (psi1, delta),
/// normalized so that the delta*psi1 and psi1^2 coefficients are 1.
struct OnePointRelations {
  RatFunc delta_psi_constant;  // delta*psi1 + r*delta^2
  RatFunc a_g;                 // psi1^2 + a_g*delta^2
};

PresentationReport scenario_I_g0(const Genus& genus = Genus::symbolic());
PresentationReport scenario_I_g1(const Genus& genus = Genus::symbolic());
OnePointRelations one_point_relations(const Genus& genus = Genus::symbolic());
PresentationReport scenario_Wn(int n, const Genus& genus = Genus::symbolic());
PresentationReport scenario_A1_vanishing(int n, const Genus& genus = Genus::symbolic());
PresentationReport scenario_R2(int n, const Genus& genus = Genus::symbolic());

}  // namespace chowforge
