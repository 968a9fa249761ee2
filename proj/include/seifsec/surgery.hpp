#pragma once

// Surgery presentation of M(0; (a1,b1), ..., (an,bn)): a 0-framed unknot K0
// with n meridians carrying surgery coefficients ai/bi.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "seifsec/rational.hpp"
#include "seifsec/seifert.hpp"

namespace seifsec {

/// A surgery coefficient p/q; nullopt value stands for infinity (q = 0).
class SurgeryCoefficient {
 public:
  static SurgeryCoefficient infinity() { return SurgeryCoefficient(); }
  /// alpha / beta, infinity when beta = 0.
  static SurgeryCoefficient from_pair(Int alpha, Int beta);

  bool is_infinite() const { return !value_; }
  const std::optional<Rational>& value() const { return value_; }

  /// Coefficient after a k-fold Rolfsen twist: p/q -> p/(q + k p).
  SurgeryCoefficient twisted(Int k) const;

  std::string to_string() const;
  friend bool operator==(const SurgeryCoefficient&, const SurgeryCoefficient&) = default;

 private:
  SurgeryCoefficient() = default;
  explicit SurgeryCoefficient(Rational v) : value_(std::move(v)) {}

  std::optional<Rational> value_;
};

struct SurgeryDiagram {
  Int k0_framing = 0;
  std::vector<SurgeryCoefficient> meridians;

  /// Only diagrams with a 0-framed K0 describe a Seifert fibration over S^2.
  bool exportable() const { return k0_framing == 0; }
  friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;
};

/// Throws std::invalid_argument for base genus > 0.
SurgeryDiagram surgery_presentation(const SeifertData& m);

/// Twists meridian i by k[i]; K0's framing shifts by sum(k). Throws
/// std::invalid_argument when k has the wrong length.
SurgeryDiagram rolfsen_twist(const SurgeryDiagram& diag, const std::vector<Int>& k);

SurgeryDiagram insert_trivial_meridian(const SurgeryDiagram& diag);
/// Throws std::invalid_argument unless meridian `index` has coefficient infinity.
SurgeryDiagram delete_trivial_meridian(const SurgeryDiagram& diag, std::size_t index);
/// result.meridians[i] = diag.meridians[order[i]].
SurgeryDiagram permute_meridians(const SurgeryDiagram& diag, const std::vector<std::size_t>& order);

/// "K0[0]; m1[2], m2[-3]". Throws std::invalid_argument for non-exportable diagrams.
std::string export_text(const SurgeryDiagram& diag);

std::ostream& operator<<(std::ostream& os, const SurgeryDiagram& diag);

}  // namespace seifsec
