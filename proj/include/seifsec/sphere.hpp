#pragma once

// Seifert fibrations of S^3 given by the circle action
// t.(z1, z2) = (e^{i a1 t} z1, e^{i a2 t} z2) with coprime weights, and their
// positive d-sections. C1 = {z2 = 0} has multiplicity a1, C2 = {z1 = 0} has
// multiplicity a2.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seifsec/seifert.hpp"

namespace seifsec {

struct SphereFibration {
  Int alpha1 = 1;
  Int alpha2 = 1;
  Int beta1 = 0;
  Int beta2 = 1;

  /// M(0; (alpha1, beta1), (alpha2, beta2)).
  SeifertData seifert() const;
  friend bool operator==(const SphereFibration&, const SphereFibration&) = default;
};

/// Bezout data with alpha1*beta2 + alpha2*beta1 = 1 and 0 <= beta1 < alpha1
/// (beta1 = 0 when alpha1 = 1). Throws std::invalid_argument unless the
/// weights are positive and coprime.
SphereFibration sphere_from_weights(Int alpha1, Int alpha2);

/// Checks gcd(alpha1, alpha2) = 1 and alpha1*beta2 + alpha2*beta1 = 1.
void validate(const SphereFibration& f);

/// The S^3 fibration isomorphic to m, if there is one (weights ordered alpha1 <= alpha2).
std::optional<SphereFibration> recognize_sphere(const SeifertData& m);

/// Ramification data of a branched covering: count points of the given index.
struct BranchProfile {
  struct Entry {
    Int count = 0;
    Int index = 2;
  };
  std::vector<Entry> entries;
  Int sheet_count = 1;

  /// Adds count points of the given index; entries of index 1 are unbranched and dropped.
  void add(Int count, Int index);
  /// sum of count * (index - 1).
  Int total_ramification() const;
};

enum class SphereFamily {
  Regular,       // d = k a1 a2,           k >= 1
  C1Boundary,    // d = k a1 a2 + a2,      k >= 0, a1 > 1
  C2Boundary,    // d = k a1 a2 + a1,      k >= 0, a2 > 1
  BothBoundary,  // d = k a1 a2 + a1 + a2, k >= 0, a1, a2 > 1
};

std::string to_string(SphereFamily f);

struct TableRow {
  SphereFamily family = SphereFamily::Regular;
  Int k_param = 0;
  Int d = 0;
  Int boundary_count = 0;
  bool c1_in_boundary = false;
  bool c2_in_boundary = false;
  Int genus = 0;

  /// Number of exceptional fibres in the boundary.
  Int singular_boundary_count() const { return (c1_in_boundary ? 1 : 0) + (c2_in_boundary ? 1 : 0); }
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// The row of the positive d-section table containing d, or nullopt when the
/// fibration has no positive d-section.
std::optional<TableRow> admissible_d(const SphereFibration& f, Int d);

/// Row of the given family with parameter k_param, or nullopt when the
/// family's side condition or k range excludes it.
std::optional<TableRow> table_row(const SphereFibration& f, SphereFamily family, Int k_param);

/// All rows with k_param <= k_max, sorted by d.
std::vector<TableRow> table_rows(const SphereFibration& f, Int k_max);

/// Branch profile of the a1*a2-sheeted covering from the capped Hopf d-section
/// onto the capped section described by row.
BranchProfile hopf_lift_profile(const SphereFibration& f, const TableRow& row);

/// Genus of the section of row obtained from Riemann-Hurwitz applied to the
/// lift to a positive d-section of the Hopf flow, whose capped surface has
/// Euler characteristic 2 - (d-1)(d-2). Throws std::logic_error if the
/// resulting genus is not a non-negative integer.
Int rh_hopf_lift_genus(const SphereFibration& f, const TableRow& row);

}  // namespace seifsec
