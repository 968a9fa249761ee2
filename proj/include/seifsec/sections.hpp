#pragma once

// Existence and topology of global surfaces of section (d-sections) for
// Seifert fibrations: 1-sections with arbitrary boundary signs, the
// necessary divisibility test for general d-sections, and the complete
// classification of positive d-sections.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seifsec/rational.hpp"
#include "seifsec/seifert.hpp"

namespace seifsec {

// ---------------------------------------------------------------------------
// 1-sections

struct BoundarySigns {
  std::size_t pair_index = 0;
  bool positive = false;
  bool negative = false;
};

struct OneSectionResult {
  bool exists = false;
  /// One entry per singular pair (alpha > 1), in presentation order.
  std::vector<BoundarySigns> singular_signs;
  /// b+ - b- when every alpha = 2 fibre is taken as a positive boundary.
  /// Each alpha = 2 fibre switched to negative raises the required b+ - b- by one.
  Int net_regular_boundary = 0;
  /// Genus of the section; it equals the base genus.
  Int genus = 0;
  std::optional<std::size_t> obstructing_pair;

  /// Number of alpha = 2 singular fibres, whose boundary sign is free.
  Int free_sign_fibres() const;
  /// Whether a 1-section with b_plus positive and b_minus negative regular boundary fibres exists.
  bool realizable(Int b_plus, Int b_minus) const;
  Int boundary_count(Int b_plus, Int b_minus) const;
};

OneSectionResult classify_one_section(const SeifertData& m);

// ---------------------------------------------------------------------------
// Necessary condition for d-sections of any sign pattern

struct PairVerdict {
  enum class Kind { Interior, Boundary, Obstructed };
  Kind kind = Kind::Interior;
  bool positive = false;  // alpha | (d*beta - 1)
  bool negative = false;  // alpha | (d*beta + 1)
};

/// One verdict per pair. Pairs with alpha = 1 are always Interior.
std::vector<PairVerdict> d_section_necessary(const SeifertData& m, Int d);

// ---------------------------------------------------------------------------
// Positive d-sections

struct FiberRole {
  enum class Kind { Boundary, Interior };
  Kind kind = Kind::Interior;
  int sign = 1;            // Boundary: +1 or -1
  Int intersections = 0;   // Interior: d / alpha

  static FiberRole boundary(int sign) { return {Kind::Boundary, sign, 0}; }
  static FiberRole interior(Int intersections) { return {Kind::Interior, 1, intersections}; }
  bool is_boundary() const { return kind == Kind::Boundary; }
  friend bool operator==(const FiberRole&, const FiberRole&) = default;
};

struct ConnectedSurface {
  Int genus = 0;
  friend bool operator==(const ConnectedSurface&, const ConnectedSurface&) = default;
};

/// Closed section (e = 0 and every alpha divides d); the number of components is not determined.
struct ClosedUndeterminedComponents {
  Int euler_characteristic = 0;
  friend bool operator==(const ClosedUndeterminedComponents&, const ClosedUndeterminedComponents&) = default;
};

using SectionTopology = std::variant<ConnectedSurface, ClosedUndeterminedComponents>;

struct SectionReport {
  Int d = 1;
  std::vector<FiberRole> fiber_roles;        // one per pair
  std::vector<std::size_t> boundary_pairs;   // indices of pairs that are boundary fibres
  std::vector<int> epsilons;                 // per boundary pair, from d*beta = a*alpha + eps
  std::vector<Int> a_coeffs;                 // per boundary pair
  Int b_bar = 0;
  Int boundary_count = 0;
  SectionTopology topology = ConnectedSurface{};

  // Exact values of the closed-form expressions. All are checked to be
  // integral before the report is returned.
  Rational ob_lhs;                     // d*e + sum_{alpha !| d} 1/alpha  (== -b_bar)
  Rational boundary_value;             // -d*e + sum_{alpha !| d} (1 - 1/alpha)
  std::optional<Rational> genus_value; // connected case only

  /// Number of singular pairs among the boundary fibres.
  Int singular_boundary_count() const { return static_cast<Int>(boundary_pairs.size()); }
  bool connected() const { return std::holds_alternative<ConnectedSurface>(topology); }
  std::optional<Int> genus() const;
};

struct SectionObstruction {
  enum class Kind {
    NotDivisible,      // alpha divides none of d, d*beta - 1, d*beta + 1
    NegativeBoundary,  // boundary fibre would be negatively oriented
    NegativeBBar,      // inequality d*e + sum 1/alpha <= 0 fails
  };
  Kind kind = Kind::NotDivisible;
  std::optional<std::size_t> pair_index;
  Int b_bar = 0;  // NegativeBBar only
  std::string message;
};

using PositiveSectionResult = std::variant<SectionReport, SectionObstruction>;

inline bool exists(const PositiveSectionResult& r) { return std::holds_alternative<SectionReport>(r); }

/// Throws std::invalid_argument for d <= 0, and std::logic_error if a closed-form
/// value that must be integral is not (which would indicate an arithmetic bug).
PositiveSectionResult classify_positive_d_section(const SeifertData& m, Int d);

/// Smallest d in [1, d_max] admitting a positive d-section.
std::optional<Int> minimal_positive_d(const SeifertData& m, Int d_max);

/// Euler characteristic of the capped-off section via Riemann-Hurwitz for the
/// d-fold branched covering over the capped 1-section of M / Z_d. Throws
/// std::invalid_argument if the report was not produced from (m, d).
Int rh_quotient_chi(const SeifertData& m, Int d, const SectionReport& report);

std::string to_string(FiberRole::Kind k);
std::string to_string(const FiberRole& role);
std::string to_string(SectionObstruction::Kind k);

}  // namespace seifsec
