#pragma once

// Curves in weighted projective planes P(a0, a1, a2) and their relation to
// positive d-sections of the Seifert fibrations of S^3.

#include <optional>
#include <utility>
#include <vector>

#include "seifsec/rational.hpp"
#include "seifsec/sphere.hpp"

namespace seifsec {

/// Weights of P(a0, a1, a2); pairwise coprime positive integers.
struct WeightedPlane {
  Int a0 = 1;
  Int a1 = 1;
  Int a2 = 1;

  friend bool operator==(const WeightedPlane&, const WeightedPlane&) = default;
};

/// Throws std::invalid_argument unless the weights are positive and pairwise coprime.
void validate(const WeightedPlane& p);

/**
 * Genus of a non-singular degree-d curve in P(a0, a1, a2):
 *
 *   g = 1/2 ( d^2/(a0 a1 a2) - d sum_{i<j} gcd(ai,aj)/(ai aj) + sum_i gcd(ai,d)/ai - 1 ).
 *
 * Returned exactly; the value is a non-negative integer only for degrees that
 * carry a non-singular curve.
 */
Rational degree_genus(const WeightedPlane& p, Int d);

/// d = k a1 a2 + eps1 a1 + eps2 a2.
struct DegreeRepresentation {
  Int d = 0;
  Int k = 0;
  int eps1 = 0;
  int eps2 = 0;

  friend bool operator==(const DegreeRepresentation&, const DegreeRepresentation&) = default;
};

/// Every representation d = k a1 a2 + eps1 a1 + eps2 a2 with k >= 0,
/// eps_i in {0, 1}, k + eps1 + eps2 >= 1 and d <= d_max, sorted by (d, k, eps1, eps2).
std::vector<DegreeRepresentation> admissible_degrees(Int alpha1, Int alpha2, Int d_max);

/// A point [a:b] of the weighted projective line P(alpha1, alpha2), as a coprime integer pair.
struct WeightedPoint {
  Int a = 1;
  Int b = 1;
};

/**
 * The factorised polynomial
 *
 *   f(z1, z2) = prod_i (b_i^{a1} z1^{a2} - a_i^{a2} z2^{a1}) * z1^{eps1} * z2^{eps2}
 *
 * in P(1, alpha1, alpha2), defining the curve {f - z0^d = 0}.
 */
struct CurveSpec {
  Int alpha1 = 1;
  Int alpha2 = 1;
  int eps1 = 0;
  int eps2 = 0;
  std::vector<WeightedPoint> roots;  // k = roots.size()

  Int k_factors() const { return static_cast<Int>(roots.size()); }
  Int degree() const;
};

/// Throws std::invalid_argument on malformed data; a repeated root (the curve
/// would be singular) is reported with a message naming both roots.
void validate(const CurveSpec& c);

/// Whether two points coincide on P(alpha1, alpha2).
bool same_weighted_point(const WeightedPoint& p, const WeightedPoint& q, Int alpha1, Int alpha2);

/// The positive d-section predicted by a curve.
struct CurveSectionSummary {
  Int d = 0;
  /// Regular boundary fibres: one per root, plus C_i when it has weight 1 and lies at infinity.
  Int regular_boundary = 0;
  /// Exceptional fibres (weight > 1) in the boundary. z1 | f puts C2 = {z1 = 0}
  /// in the boundary, z2 | f puts C1.
  bool c1_in_boundary = false;
  bool c2_in_boundary = false;
  Int boundary_count = 0;
  Rational genus;  // degree_genus(P(1, alpha1, alpha2), d)

  friend bool operator==(const CurveSectionSummary&, const CurveSectionSummary&) = default;
};

CurveSectionSummary curve_section_correspondence(const CurveSpec& c);

/// Whether a curve summary describes the same section as a table row.
bool matches(const CurveSectionSummary& s, const TableRow& row);

}  // namespace seifsec
