#include "chowforge/rational_coeffs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "chowforge/error.hpp"

namespace chowforge {

std::string to_string(const BigRational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly::UniPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

UniPoly::UniPoly(const BigRational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::from_ints(std::initializer_list<long> ascending) {
  std::vector<BigRational> c;
  for (long v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::g() { return from_ints({0, 1}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

BigRational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigRational UniPoly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<BigRational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(coeffs_[i] * BigRational(static_cast<long>(i)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  BigRational lc = leading();
  std::vector<BigRational> c = coeffs_;
  for (auto& v : c) v /= lc;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + UniPoly(*it);
  return acc;
}

UniPoly UniPoly::operator-() const {
  std::vector<BigRational> c = coeffs_;
  for (auto& v : c) v = -v;
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "polynomial division by zero");
  std::vector<BigRational> rem = a.coeffs_;
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) {
    q = UniPoly();
    r = a;
    return;
  }
  std::vector<BigRational> quo(static_cast<std::size_t>(da - db + 1));
  const BigRational& lb = b.leading();
  for (int k = da; k >= db; --k) {
    BigRational f = rem[static_cast<std::size_t>(k)] / lb;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  UniPoly::divmod(a, b, q, r);
  return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  UniPoly::divmod(a, b, q, r);
  return r;
}

BigRational UniPoly::integer_normalizer() const {
  if (is_zero()) return 1;
  BigInt den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& c : coeffs_) {
    BigInt scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  BigRational s(den_lcm, num_gcd);
  s.canonicalize();
  if (leading() < 0) s = -s;
  return s;
}

namespace {

void append_term(std::ostringstream& os, const BigRational& c, int power, const std::string& var,
                 bool first) {
  BigRational mag = abs(c);
  if (c < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  if (power == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << '*';
  os << var;
  if (power > 1) os << '^' << power;
}

}  // namespace

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    append_term(os, c, k, var, first);
    first = false;
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

int sign_of(const BigRational& v) { return sgn(v); }

int sign_at_infinity(const UniPoly& p) { return sgn(p.leading()); }

int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_roots_geq(const UniPoly& p, const BigRational& bound) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "sturm_roots_geq of the zero polynomial");
  // Square-free part carries the same distinct roots.
  UniPoly q = p / poly_gcd(p, p.derivative());
  int extra = 0;
  if (q.eval(bound) == 0) {
    q = q / UniPoly(std::vector<BigRational>{-bound, 1});
    extra = 1;
  }
  if (q.is_constant()) return extra;

  std::vector<UniPoly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  std::vector<int> at_bound, at_inf;
  for (const auto& s : chain) {
    at_bound.push_back(sign_of(s.eval(bound)));
    at_inf.push_back(sign_at_infinity(s));
  }
  return variations(at_bound) - variations(at_inf) + extra;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc RatFunc::normalize(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::kZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.is_constant()) {
    BigRational d = den.leading();
    std::vector<BigRational> c = num.coeffs();
    for (auto& v : c) v /= d;
    return RatFunc(UniPoly(std::move(c)), UniPoly(1), true);
  }
  UniPoly gcd = poly_gcd(num, den);
  UniPoly n = num / gcd;
  UniPoly d = den / gcd;
  BigRational lc = d.leading();
  std::vector<BigRational> nc = n.coeffs();
  for (auto& v : nc) v /= lc;
  return RatFunc(UniPoly(std::move(nc)), d.monic(), true);
}

BigRational RatFunc::constant_value() const {
  return num_.coeff(0) / den_.coeff(0);
}

BigRational RatFunc::eval(const BigRational& g0) const {
  BigRational d = den_.eval(g0);
  if (d == 0)
    throw Error(ErrorCode::kPoleAtPoint, "denominator " + den_.to_string() + " vanishes at g=" + g0.get_str());
  return num_.eval(g0) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kZeroDenominator, "inverse of zero in Q(g)");
  return normalize(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::normalize(a.num_ + b.num_, a.den_);
  return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, UniPoly(1), true);
  return RatFunc::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  BigInt lcm = 1;
  for (const auto* p : {&num_, &den_})
    for (const auto& c : p->coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  UniPoly n = num_ * UniPoly(BigRational(lcm));
  UniPoly d = den_ * UniPoly(BigRational(lcm));
  BigInt content = 0;
  for (const auto* p : {&n, &d})
    for (const auto& c : p->coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  BigRational scale(1, content);
  if (d.leading() < 0) scale = -scale;
  n = n * UniPoly(scale);
  d = d * UniPoly(scale);
  return "(" + n.to_string(var) + ")/(" + d.to_string(var) + ")";
}

// ---------------------------------------------------------------------------
// Parsing

UniPoly parse_unipoly(const std::string& text, const std::string& var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorCode::kConfig, "empty polynomial text");
  UniPoly acc;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw Error(ErrorCode::kConfig, "malformed polynomial '" + text + "'");
    BigRational coeff = 1;
    int power = 0;
    std::size_t vpos = term.find(var);
    std::string cpart = vpos == std::string::npos ? term : term.substr(0, vpos);
    if (!cpart.empty()) {
      if (cpart.back() == '*') cpart.pop_back();
      if (!cpart.empty()) {
        try {
          coeff = BigRational(cpart);
        } catch (const std::invalid_argument&) {
          throw Error(ErrorCode::kConfig, "bad coefficient '" + cpart + "'");
        }
        coeff.canonicalize();
      }
    }
    if (vpos != std::string::npos) {
      power = 1;
      std::string rest = term.substr(vpos + var.size());
      if (!rest.empty()) {
        if (rest[0] != '^') throw Error(ErrorCode::kConfig, "malformed term '" + term + "'");
        power = std::stoi(rest.substr(1));
      }
    }
    std::vector<BigRational> c(static_cast<std::size_t>(power) + 1);
    c[static_cast<std::size_t>(power)] = coeff * sign;
    acc += UniPoly(std::move(c));
    i = j;
  }
  return acc;
}

}  // namespace chowforge
