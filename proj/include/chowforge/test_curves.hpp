#pragma once

// Two families of test curves in a partial compactification of the
// hyperelliptic pointed moduli space: blowup bookkeeping, psi degrees, the
// intersection matrix against (psi_i, delta_ij), and its full-rank
// certificate as a polynomial identity in g.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowforge/rational_coeffs.hpp"
#include "json.hpp"

namespace chowforge {

/// `count` exceptional curves (a polynomial in g, e.g. 2g+2), each meeting
/// the proper transforms of exactly the listed sections once.
struct ExceptionalLocus {
  std::string name;
  UniPoly count;
  std::vector<std::string> sections;
};

struct BlowupLedger {
  std::vector<std::string> sections;
  std::map<std::string, UniPoly> base_self_intersections;  // on C x C
  std::vector<ExceptionalLocus> exceptionals;
  std::map<std::string, UniPoly> derived_self_intersections;  // on the blowup

  /// Number of exceptional curves through the proper transform.
  UniPoly exceptional_count(const std::string& section) const;
  /// Exceptional curves meeting exactly sections a and b: each is a
  /// reduced point of the boundary divisor delta_ab on the test curve.
  UniPoly boundary_count(const std::string& a, const std::string& b) const;
};

/// Fills derived_self_intersections by expanding
/// (pullback sigma)^2 = (proper + sum E)^2 with proper.E = 1, E^2 = -1.
BlowupLedger make_ledger(std::vector<std::string> sections, std::map<std::string, UniPoly> base,
                         std::vector<ExceptionalLocus> exceptionals);

std::string section_name(int i);

/// T_i: p_i roams (diagonal), the others are fixed non-Weierstrass points.
BlowupLedger family_one_ledger(int n, int i);
/// T_ij: p_i roams, p_j is its conjugate, the others are fixed.
BlowupLedger family_two_ledger(int n, int i, int j);

/// deg of psi on the test curve: minus the derived self-intersection.
UniPoly psi_degree(const BlowupLedger& ledger, const std::string& section);

struct IntersectionMatrix {
  int n = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<UniPoly>> entries;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
  /// Entrywise evaluation at an integer genus (constant polynomials).
  IntersectionMatrix specialize(long g0) const;
};

/// Rows T_1..T_n, T_ij (i<j lexicographic); columns psi_1..psi_n, delta_kl.
IntersectionMatrix intersection_matrix(int n, std::optional<long> g0 = std::nullopt);

/// Columns psi_i -> psi_i - sum_j delta_ij, rows T_ij -> T_ij - T_i - T_j.
IntersectionMatrix block_change_of_basis(const IntersectionMatrix& m);

/// Upper-left (2g-2)*Id, lower-right 2g*Id, lower-left zero.
bool has_block_form(const IntersectionMatrix& m, std::optional<long> g0 = std::nullopt);

/// Fraction-free determinant over Q[g]; throws NotSquare.
UniPoly bareiss_determinant(const std::vector<std::vector<UniPoly>>& m);
/// Gaussian elimination over Q(g), used as an independent cross-check.
RatFunc gaussian_determinant(const std::vector<std::vector<UniPoly>>& m);

int rational_rank(std::vector<std::vector<BigRational>> m);

struct FullRankCertificate {
  UniPoly determinant;
  UniPoly expected_magnitude;  // (2g-2)^n (2g)^(n choose 2)
  int sign = 0;                // determinant = sign * expected, 0 if neither
  bool gaussian_agrees = false;
  int roots_geq_2 = -1;
  bool certified() const { return sign != 0 && gaussian_agrees && roots_geq_2 == 0; }
};

FullRankCertificate certify_full_rank(const IntersectionMatrix& m);

std::string matrix_to_csv(const IntersectionMatrix& m);
nlohmann::ordered_json matrix_to_json(const IntersectionMatrix& m);
nlohmann::ordered_json ledger_to_json(const BlowupLedger& ledger);

}  // namespace chowforge
