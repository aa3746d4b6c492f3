#pragma once

// Sparse polynomials over Q(g) in named, graded generators, and quotient
// ring presentations with a Buchberger normal-form engine.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chowforge/rational_coeffs.hpp"

namespace chowforge {

struct Generator {
  std::string name;
  int degree = 1;
};

/// Ordered, immutable list of generators. The declaration order fixes the
/// monomial order (weighted graded reverse lexicographic).
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& at(std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Throws UnknownGenerator.
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const;
  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b);

 private:
  std::vector<Generator> gens_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr make_generators(std::vector<Generator> gens);

using Exponents = std::vector<int>;

/// Strict "greater than" in weighted grevlex: maps keyed by this comparator
/// iterate from the leading monomial down.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<int> weights) : weights_(std::move(weights)) {}
  int weighted_degree(const Exponents& e) const;
  bool operator()(const Exponents& a, const Exponents& b) const;

 private:
  std::vector<int> weights_;
};

class RingElement {
 public:
  using TermMap = std::map<Exponents, RatFunc, MonomialOrder>;

  RingElement() = default;
  explicit RingElement(GeneratorSetPtr gens);

  static RingElement constant(GeneratorSetPtr gens, const RatFunc& c);
  static RingElement var(GeneratorSetPtr gens, const std::string& name);
  static RingElement monomial(GeneratorSetPtr gens, Exponents exps, const RatFunc& c);

  const GeneratorSetPtr& generators() const { return gens_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Leading monomial / coefficient in the ring's monomial order.
  const Exponents& leading_monomial() const;
  const RatFunc& leading_coeff() const;
  RatFunc coefficient(const Exponents& e) const;
  /// Coefficient of a monomial written as a product of generator names.
  RatFunc coefficient(const std::vector<std::string>& factors) const;
  RatFunc coefficient(std::initializer_list<std::string> factors) const {
    return coefficient(std::vector<std::string>(factors));
  }

  /// Highest weighted degree among terms (-1 for zero).
  int top_degree() const;
  bool is_homogeneous() const;
  RingElement homogeneous_part(int d) const;
  /// Largest exponent of the given generator.
  int max_exponent(const std::string& name) const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RatFunc& c, const RingElement& a);
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  RingElement pow(int k) const;
  friend bool operator==(const RingElement& a, const RingElement& b);

  /// Ring map: generators named in `images` go to their image, every other
  /// generator goes to the same-named generator of `target`.
  RingElement substitute(const std::map<std::string, RingElement>& images,
                         const GeneratorSetPtr& target) const;
  /// Same element viewed in a larger (or reordered) generator set.
  RingElement embed(const GeneratorSetPtr& target) const { return substitute({}, target); }
  RingElement map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;
  /// Coefficientwise evaluation at g = g0; throws PoleAtPoint.
  RingElement specialize(const BigRational& g0) const;

  /// Canonical text, terms in descending monomial order, e.g.
  /// "(8*g^3+12*g^2+4*g)*c1^2+(-8*g^3+8*g)*c2".
  std::string to_string() const;

  void add_term(const Exponents& e, const RatFunc& c);

 private:
  GeneratorSetPtr gens_;
  TermMap terms_;
};

/// Parses expressions such as "z^2 + c1*z + c2" or "(1/(g-1))*(psi1+psi2)".
/// The symbol g is the coefficient parameter; every other identifier must
/// name a generator. Division is allowed only by generator-free factors.
RingElement parse_element(const GeneratorSetPtr& gens, const std::string& text);

struct RingOptions {
  std::size_t max_basis_size = 400;
};

class RingPresentation {
 public:
  const GeneratorSetPtr& generators() const { return gens_; }
  const std::vector<RingElement>& relations() const { return relations_; }
  /// Reduced Groebner basis, monic, sorted by ascending leading monomial.
  const std::vector<RingElement>& groebner_basis() const { return basis_; }

  RingElement normal_form(const RingElement& e) const;
  bool is_zero(const RingElement& e) const { return normal_form(e).is_zero(); }

  /// Dimension over Q(g) of the degree-d part of the quotient; throws
  /// InhomogeneousRelations if any relation is not homogeneous.
  int graded_component_dim(int d) const;
  std::vector<Exponents> standard_monomials(int d) const;

  /// Every relation and every S-polynomial of the basis reduces to zero.
  bool certify() const;

  RingElement var(const std::string& name) const { return RingElement::var(gens_, name); }
  RingElement parse(const std::string& text) const { return parse_element(gens_, text); }

  friend RingPresentation ring_define(std::vector<Generator> gens, std::vector<std::string> rels,
                                      RingOptions options);
  friend RingPresentation ring_define(GeneratorSetPtr gens, std::vector<RingElement> rels,
                                      RingOptions options);

 private:
  GeneratorSetPtr gens_;
  std::vector<RingElement> relations_;
  std::vector<RingElement> basis_;
};

RingPresentation ring_define(GeneratorSetPtr gens, std::vector<RingElement> rels,
                             RingOptions options = {});
RingPresentation ring_define(std::vector<Generator> gens, std::vector<std::string> rels,
                             RingOptions options = {});

/// Free-function spellings of the presentation queries.
RingElement normal_form(const RingElement& e, const RingPresentation& p);
bool is_zero(const RingElement& e, const RingPresentation& p);
int graded_component_dim(const RingPresentation& p, int d);

}  // namespace chowforge
