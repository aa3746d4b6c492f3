#include "chowforge/graded_ring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "chowforge/error.hpp"

namespace chowforge {

// ---------------------------------------------------------------------------
// Generators and monomial order

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.degree < 1) throw Error(ErrorCode::kConfig, "generator '" + g.name + "' has degree < 1");
    if (g.name == "g") throw Error(ErrorCode::kConfig, "'g' is reserved for the genus parameter");
    if (!seen.insert(g.name).second)
      throw Error(ErrorCode::kConfig, "duplicate generator '" + g.name + "'");
  }
}

std::size_t GeneratorSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw Error(ErrorCode::kUnknownGenerator, "'" + name + "'");
}

bool GeneratorSet::contains(const std::string& name) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Generator& g) { return g.name == name; });
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.gens_[i].name != b.gens_[i].name || a.gens_[i].degree != b.gens_[i].degree) return false;
  return true;
}

GeneratorSetPtr make_generators(std::vector<Generator> gens) {
  return std::make_shared<const GeneratorSet>(std::move(gens));
}

int MonomialOrder::weighted_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights_[i];
  return d;
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = weighted_degree(a);
  const int db = weighted_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

std::vector<int> weights_of(const GeneratorSet& gens) {
  std::vector<int> w;
  for (const auto& g : gens.generators()) w.push_back(g.degree);
  return w;
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.generators() == b.generators()) return;
  if (a.generators() && b.generators() && *a.generators() == *b.generators()) return;
  throw Error(ErrorCode::kUnknownGenerator, "ring elements live in different generator sets");
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exp_sub(const Exponents& b, const Exponents& a) {
  Exponents r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(GeneratorSetPtr gens)
    : gens_(std::move(gens)), terms_(MonomialOrder(weights_of(*gens_))) {}

RingElement RingElement::constant(GeneratorSetPtr gens, const RatFunc& c) {
  RingElement r(gens);
  r.add_term(Exponents(gens->size(), 0), c);
  return r;
}

RingElement RingElement::var(GeneratorSetPtr gens, const std::string& name) {
  Exponents e(gens->size(), 0);
  e[gens->index_of(name)] = 1;
  return monomial(std::move(gens), std::move(e), RatFunc(1));
}

RingElement RingElement::monomial(GeneratorSetPtr gens, Exponents exps, const RatFunc& c) {
  RingElement r(gens);
  r.add_term(exps, c);
  return r;
}

void RingElement::add_term(const Exponents& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

const Exponents& RingElement::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::kZeroPolynomial, "leading monomial of 0");
  return terms_.begin()->first;
}

const RatFunc& RingElement::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorCode::kZeroPolynomial, "leading coefficient of 0");
  return terms_.begin()->second;
}

RatFunc RingElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFunc() : it->second;
}

RatFunc RingElement::coefficient(const std::vector<std::string>& factors) const {
  Exponents e(gens_->size(), 0);
  for (const auto& f : factors) ++e[gens_->index_of(f)];
  return coefficient(e);
}

int RingElement::top_degree() const {
  if (terms_.empty()) return -1;
  return terms_.key_comp().weighted_degree(terms_.begin()->first);
}

bool RingElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = top_degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return terms_.key_comp().weighted_degree(t.first) == d;
  });
}

RingElement RingElement::homogeneous_part(int d) const {
  RingElement r(gens_);
  for (const auto& [e, c] : terms_)
    if (terms_.key_comp().weighted_degree(e) == d) r.terms_.emplace(e, c);
  return r;
}

int RingElement::max_exponent(const std::string& name) const {
  const std::size_t i = gens_->index_of(name);
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.first[i]);
  return m;
}

RingElement RingElement::operator-() const {
  RingElement r(gens_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (!a.gens_) return b;
  if (!b.gens_) return a;
  require_same_ring(a, b);
  RingElement r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  RingElement r(a.gens_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

RingElement operator*(const RatFunc& c, const RingElement& a) {
  RingElement r(a.gens_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, c * v);
  return r;
}

RingElement RingElement::pow(int k) const {
  RingElement r = constant(gens_, RatFunc(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (!a.gens_ || !b.gens_) return false;
  if (a.gens_ != b.gens_ && !(*a.gens_ == *b.gens_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

RingElement RingElement::substitute(const std::map<std::string, RingElement>& images,
                                    const GeneratorSetPtr& target) const {
  // Images are built only for generators that occur, so generators absent
  // from the target are fine as long as they do not appear.
  std::vector<int> used(gens_->size(), 0);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.first.size(); ++i) used[i] = std::max(used[i], t.first[i]);
  std::vector<std::vector<RingElement>> powers(gens_->size());
  for (std::size_t i = 0; i < gens_->size(); ++i) {
    if (used[i] == 0) continue;
    const std::string& name = gens_->at(i).name;
    auto it = images.find(name);
    RingElement img = it == images.end()            ? var(target, name)
                      : it->second.generators() == target ? it->second
                                                          : it->second.embed(target);
    powers[i].push_back(constant(target, RatFunc(1)));
    for (int k = 1; k <= used[i]; ++k) powers[i].push_back(powers[i].back() * img);
  }
  RingElement result(target);
  for (const auto& [e, c] : terms_) {
    RingElement term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
    result += term;
  }
  return result;
}

RingElement RingElement::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  RingElement r(gens_);
  for (const auto& [e, c] : terms_) r.add_term(e, f(c));
  return r;
}

RingElement RingElement::specialize(const BigRational& g0) const {
  return map_coefficients([&](const RatFunc& c) { return RatFunc(c.eval(g0)); });
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += gens_->at(i).name;
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      BigRational v = c.constant_value();
      negative = v < 0;
      BigRational mag = abs(v);
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else if (c.is_polynomial() && c.num().coeffs().size() - std::count(c.num().coeffs().begin(),
                                                                         c.num().coeffs().end(), 0) == 1) {
      // single-term polynomial coefficient such as -2*g
      UniPoly p = c.num();
      negative = p.leading() < 0;
      coeff = (negative ? -p : p).to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    os << coeff;
    if (!coeff.empty() && !mono.empty()) os << '*';
    os << mono;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ElementParser {
 public:
  ElementParser(const GeneratorSetPtr& gens, const std::string& text) : gens_(gens), text_(text) {}

  RingElement parse() {
    RingElement r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kConfig, "cannot parse '" + text_ + "': " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElement expr() {
    RingElement r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RingElement term() {
    RingElement r = unary();
    for (;;) {
      if (accept('*')) {
        r = r * unary();
      } else if (accept('/')) {
        RingElement d = unary();
        if (d.is_zero()) fail("division by zero");
        if (d.size() != 1 || d.top_degree() != 0) fail("division by a generator expression");
        r = d.leading_coeff().inverse() * r;
      } else {
        return r;
      }
    }
  }

  RingElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RingElement power() {
    RingElement base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(std::stoi(text_.substr(start, pos_ - start)));
    }
    return base;
  }

  RingElement atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (accept('(')) {
      RingElement r = expr();
      if (!accept(')')) fail("missing ')'");
      return r;
    }
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RingElement::constant(gens_, RatFunc(BigRational(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "g") return RingElement::constant(gens_, RatFunc::g());
      return RingElement::var(gens_, name);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const GeneratorSetPtr& gens_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_element(const GeneratorSetPtr& gens, const std::string& text) {
  return ElementParser(gens, text).parse();
}

// ---------------------------------------------------------------------------
// Groebner bases

namespace {

RingElement make_monic(const RingElement& f) {
  if (f.is_zero()) return f;
  return f.leading_coeff().inverse() * f;
}

// Full reduction of f modulo the list (leading terms assumed monic).
RingElement reduce(const RingElement& f, const std::vector<RingElement>& basis) {
  const auto& gens = f.generators();
  RingElement p = f;
  RingElement rem(gens);
  while (!p.is_zero()) {
    const Exponents lm = p.leading_monomial();
    const RatFunc lc = p.leading_coeff();
    const RingElement* divisor = nullptr;
    for (const auto& b : basis) {
      if (divides(b.leading_monomial(), lm)) {
        divisor = &b;
        break;
      }
    }
    if (divisor != nullptr) {
      RingElement mult = RingElement::monomial(gens, exp_sub(lm, divisor->leading_monomial()),
                                               lc / divisor->leading_coeff());
      p -= mult * *divisor;
    } else {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

RingElement s_polynomial(const RingElement& a, const RingElement& b) {
  const auto& gens = a.generators();
  Exponents l = exp_lcm(a.leading_monomial(), b.leading_monomial());
  RingElement ma = RingElement::monomial(gens, exp_sub(l, a.leading_monomial()), a.leading_coeff().inverse());
  RingElement mb = RingElement::monomial(gens, exp_sub(l, b.leading_monomial()), b.leading_coeff().inverse());
  return ma * a - mb * b;
}

std::vector<RingElement> buchberger(std::vector<RingElement> input, const RingOptions& options) {
  std::vector<RingElement> basis;
  for (auto& f : input) {
    RingElement r = basis.empty() ? f : reduce(f, basis);
    if (!r.is_zero()) basis.push_back(make_monic(r));
  }
  if (basis.size() > options.max_basis_size)
    throw Error(ErrorCode::kNonterminatingHint,
                "Groebner basis exceeded " + std::to_string(options.max_basis_size) + " elements");
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
    RingElement r = reduce(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r));
    if (basis.size() > options.max_basis_size)
      throw Error(ErrorCode::kNonterminatingHint,
                  "Groebner basis exceeded " + std::to_string(options.max_basis_size) + " elements");
    const std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }

  // Minimalize, then interreduce.
  std::vector<RingElement> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<RingElement> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<RingElement> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const RingElement& f = minimal[i];
    RingElement head = RingElement::monomial(f.generators(), f.leading_monomial(), f.leading_coeff());
    RingElement tail = others.empty() ? f - head : reduce(f - head, others);
    reduced.push_back(make_monic(head + tail));
  }
  if (!reduced.empty()) {
    MonomialOrder order = reduced.front().terms().key_comp();
    std::sort(reduced.begin(), reduced.end(), [&](const RingElement& a, const RingElement& b) {
      return order(b.leading_monomial(), a.leading_monomial());
    });
  }
  return reduced;
}

void enumerate_monomials(const std::vector<int>& weights, std::size_t idx, int remaining, Exponents& cur,
                         std::vector<Exponents>& out) {
  if (idx == weights.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int k = 0; k * weights[idx] <= remaining; ++k) {
    cur[idx] = k;
    enumerate_monomials(weights, idx + 1, remaining - k * weights[idx], cur, out);
  }
  cur[idx] = 0;
}

}  // namespace

RingPresentation ring_define(GeneratorSetPtr gens, std::vector<RingElement> rels, RingOptions options) {
  RingPresentation p;
  p.gens_ = std::move(gens);
  for (auto& r : rels) {
    if (!r.generators()) r = RingElement(p.gens_);
    if (!(r.generators() == p.gens_)) {
      for (const auto& g : r.generators()->generators())
        if (!p.gens_->contains(g.name)) throw Error(ErrorCode::kUnknownGenerator, "'" + g.name + "'");
      r = r.embed(p.gens_);
    }
  }
  p.relations_ = std::move(rels);
  std::vector<RingElement> nonzero;
  for (const auto& r : p.relations_)
    if (!r.is_zero()) nonzero.push_back(r);
  p.basis_ = buchberger(std::move(nonzero), options);
  return p;
}

RingPresentation ring_define(std::vector<Generator> gens, std::vector<std::string> rels, RingOptions options) {
  GeneratorSetPtr set = make_generators(std::move(gens));
  std::vector<RingElement> parsed;
  for (const auto& r : rels) parsed.push_back(parse_element(set, r));
  return ring_define(set, std::move(parsed), options);
}

RingElement RingPresentation::normal_form(const RingElement& e) const {
  RingElement x = e;
  if (!x.generators()) return RingElement(gens_);
  if (!(x.generators() == gens_)) {
    for (const auto& g : x.generators()->generators())
      if (!gens_->contains(g.name)) throw Error(ErrorCode::kUnknownGenerator, "'" + g.name + "'");
    x = x.embed(gens_);
  }
  if (basis_.empty()) return x;
  return reduce(x, basis_);
}

std::vector<Exponents> RingPresentation::standard_monomials(int d) const {
  for (const auto& r : relations_)
    if (!r.is_homogeneous())
      throw Error(ErrorCode::kInhomogeneousRelations, "relation " + r.to_string() + " is not homogeneous");
  std::vector<Exponents> all;
  if (d < 0) return all;
  Exponents cur(gens_->size(), 0);
  enumerate_monomials(weights_of(*gens_), 0, d, cur, all);
  std::vector<Exponents> standard;
  for (const auto& m : all) {
    bool hit = std::any_of(basis_.begin(), basis_.end(),
                           [&](const RingElement& b) { return divides(b.leading_monomial(), m); });
    if (!hit) standard.push_back(m);
  }
  return standard;
}

int RingPresentation::graded_component_dim(int d) const {
  return static_cast<int>(standard_monomials(d).size());
}

bool RingPresentation::certify() const {
  for (const auto& r : relations_)
    if (!normal_form(r).is_zero()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!reduce(s_polynomial(basis_[i], basis_[j]), basis_).is_zero()) return false;
  return true;
}

RingElement normal_form(const RingElement& e, const RingPresentation& p) { return p.normal_form(e); }
bool is_zero(const RingElement& e, const RingPresentation& p) { return p.is_zero(e); }
int graded_component_dim(const RingPresentation& p, int d) { return p.graded_component_dim(d); }

}  // namespace chowforge
