#pragma once

// Exact coefficient arithmetic: rationals, polynomials in the genus
// parameter g, and the field Q(g) of rational functions in g.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace chowforge {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigRational& q);

/// Dense univariate polynomial over Q in the variable g.
/// Coefficients are indexed by degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs);
  UniPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  UniPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)

  /// Ascending coefficients, e.g. {-1, 0, 1} is g^2 - 1.
  static UniPoly from_ints(std::initializer_list<long> ascending);
  static UniPoly g();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const BigRational& leading() const;
  BigRational coeff(int i) const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  BigRational eval(const BigRational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Polynomial composition (*this)(inner).
  UniPoly compose(const UniPoly& inner) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws ZeroPolynomial when dividing by zero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b);

  /// Smallest positive rational s with s * (*this) having coprime integer
  /// coefficients and a positive leading coefficient.
  BigRational integer_normalizer() const;

  /// Canonical text: descending degree, explicit '*', no spaces ("-8*g^3+8*g").
  std::string to_string(const std::string& var = "g") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Number of distinct real roots of p in [bound, +inf), by Sturm sequences.
/// Throws ZeroPolynomial for p = 0.
int sturm_roots_geq(const UniPoly& p, const BigRational& bound);

/// Element of Q(g): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UniPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Reduces num/den; throws ZeroDenominator if den = 0.
  static RatFunc normalize(const UniPoly& num, const UniPoly& den);
  static RatFunc g() { return RatFunc(UniPoly::g()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant element; callers check is_constant() first.
  BigRational constant_value() const;

  /// Exact f(g0); throws PoleAtPoint when den(g0) = 0.
  BigRational eval(const BigRational& g0) const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical text. Polynomials print as UniPoly; proper fractions print
  /// as "(N)/(D)" with N, D coprime integer polynomials, lc(D) > 0.
  std::string to_string(const std::string& var = "g") const;

 private:
  RatFunc(UniPoly num, UniPoly den, bool /*already_normal*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  UniPoly num_;
  UniPoly den_;
};

/// Parses the canonical polynomial text produced by UniPoly::to_string.
UniPoly parse_unipoly(const std::string& text, const std::string& var = "g");

}  // namespace chowforge
