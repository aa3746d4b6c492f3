#pragma once

// Conditions imposed by points and jets on forms of bidegree (g+1, 2) on
// P^1 x P^1, exact rank over Q or F_p, and random smooth points on curves.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowforge/rational_coeffs.hpp"
#include "json.hpp"

namespace chowforge {

class PrimeField {
 public:
  /// Throws Config unless p is an odd prime below 2^62.
  explicit PrimeField(std::uint64_t p);
  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  /// Reduction of an exact rational; throws FieldMismatch if p divides the denominator.
  std::uint64_t reduce(const BigRational& q) const;
  bool is_square(std::uint64_t a) const;
  /// Tonelli-Shanks; nullopt for non-residues.
  std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

/// 1000003 unless CHOWFORGE_PRIME_DEFAULT is set.
std::uint64_t default_prime();

struct Bidegree {
  int a;  // g+1
  int b;  // 2
};

Bidegree bidegree_for_genus(int g);

struct Monomial {
  int alpha;  // exponent of x0; x1 has a - alpha
  int beta;   // exponent of y0; y1 has 2 - beta
};

/// The 3g+6 monomials x0^alpha x1^(g+1-alpha) y0^beta y1^(2-beta), ordered
/// by alpha then beta, both descending. Throws BadGenus for g < 2.
std::vector<Monomial> monomial_basis(int g);

/// Homogeneous coordinates ([x0:x1], [y0:y1]). Over F_p the coordinates
/// are integer residues in [0, p).
struct ProjPoint {
  BigRational x0, x1, y0, y1;
};

enum class ConditionKind { kSimple, kHorizontalJet, kVerticalJet };

struct PointCondition {
  ProjPoint point;
  ConditionKind kind = ConditionKind::kSimple;
  int order = 1;  // HorizontalJet: number of rows (orders 0..order-1); VerticalJet: 1
  /// Chart per factor: 0 uses x0 != 0 (resp. y0), 1 uses x1 (resp. y1), -1 picks the first valid one.
  int x_chart = -1;
  int y_chart = -1;

  static PointCondition simple(ProjPoint p) { return {std::move(p), ConditionKind::kSimple, 1}; }
  static PointCondition horizontal_jet(ProjPoint p, int m) { return {std::move(p), ConditionKind::kHorizontalJet, m}; }
  static PointCondition vertical_jet(ProjPoint p) { return {std::move(p), ConditionKind::kVerticalJet, 1}; }
  int rows() const;
};

struct PointConfig {
  std::vector<PointCondition> conditions;
  std::optional<std::uint64_t> prime;  // nullopt: rationals
  /// Require pairwise distinct first-factor projections.
  bool distinct_first_projections = false;
};

/// Exact matrix over Q, or over F_p with entries stored as residues.
struct FieldMatrix {
  std::optional<std::uint64_t> prime;
  std::vector<std::vector<BigRational>> rows;
  std::size_t cols = 0;
};

/// One row per scalar condition, columns in monomial_basis order. Jet rows
/// are Hasse derivatives in the chosen affine chart, each row scaled by a
/// nonzero power of the chart coordinate so no division is needed.
/// Throws PointAtChartBoundary, FieldMismatch, BadIndex, BadGenus, Config.
FieldMatrix evaluation_matrix(const PointConfig& cfg, int g);

int rank_exact(const FieldMatrix& m);

struct GeneralPositionWitness {
  std::uint64_t trial_seed = 0;
  int trial = 0;
  std::vector<ProjPoint> points;
  int rank = 0;
};

struct GeneralPositionVerdict {
  int g = 0;
  int n = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  bool exploratory = false;
  int trials_run = 0;
  int best_rank = 0;
  int target_rank = 0;
  std::optional<GeneralPositionWitness> witness;
};

/// n-1 random points, the first g of them on one horizontal line, must
/// impose independent conditions. Throws BoundViolated if n-1 > 3g+5
/// unless exploratory.
GeneralPositionVerdict check_general_position(int g, int n, std::uint64_t seed, int trials, std::uint64_t p,
                                              bool exploratory = false);

/// F = sum of coefficient * monomial, in monomial_basis order, over F_p.
struct CurveSample {
  int g = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> form;
  std::vector<ProjPoint> points;
};

struct SamplingOptions {
  int form_attempts = 50;
  int point_attempts_per_point = 200;
};

/// Random form passing the irreducibility heuristics and `count` smooth
/// points on it with distinct x. Throws SamplingExhausted, BadGenus.
CurveSample sample_curve_points(int g, int count, std::uint64_t p, std::uint64_t seed, SamplingOptions opts = {});

/// 2g+6 points cut on a random curve by two vertical and two horizontal
/// lines, i.e. by a (2,2) curve.
CurveSample sample_complete_intersection_points(int g, std::uint64_t p, std::uint64_t seed,
                                                SamplingOptions opts = {});

/// Value of the form at a point, over F_p.
std::uint64_t evaluate_form(const CurveSample& s, const ProjPoint& pt);
bool is_smooth_point(const CurveSample& s, const ProjPoint& pt);

struct RiemannRochCounts {
  int h0_ambient;
  int h0_restricted;
  int deg_N;
  int kernel_dim;
};

RiemannRochCounts riemann_roch_counts(int g);

nlohmann::ordered_json point_to_json(const ProjPoint& p);
nlohmann::ordered_json verdict_to_json(const GeneralPositionVerdict& v);
nlohmann::ordered_json sample_to_json(const CurveSample& s, int rank);

}  // namespace chowforge
