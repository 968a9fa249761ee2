#include "seifsec/surgery.hpp"

#include <sstream>
#include <stdexcept>

namespace seifsec {

SurgeryCoefficient SurgeryCoefficient::from_pair(Int alpha, Int beta) {
  if (beta == 0) return infinity();
  return SurgeryCoefficient(Rational(alpha, beta));
}

SurgeryCoefficient SurgeryCoefficient::twisted(Int k) const {
  // infinity = 1/0 twists to 1/k.
  const BigInt p = value_ ? value_->numerator() : BigInt(1);
  const BigInt q = value_ ? value_->denominator() : BigInt(0);
  const BigInt q_new = q + BigInt(static_cast<long>(k)) * p;
  if (q_new == 0) return infinity();
  return SurgeryCoefficient(Rational(p, q_new));
}

std::string SurgeryCoefficient::to_string() const { return value_ ? value_->to_string() : "inf"; }

SurgeryDiagram surgery_presentation(const SeifertData& m) {
  if (m.base_genus() != 0) throw std::invalid_argument("surgery presentation requires base genus 0");
  SurgeryDiagram diag;
  diag.meridians.reserve(m.size());
  for (const auto& p : m.pairs()) diag.meridians.push_back(SurgeryCoefficient::from_pair(p.alpha, p.beta));
  return diag;
}

SurgeryDiagram rolfsen_twist(const SurgeryDiagram& diag, const std::vector<Int>& k) {
  if (k.size() != diag.meridians.size()) throw std::invalid_argument("one twist count per meridian required");
  SurgeryDiagram out;
  out.k0_framing = diag.k0_framing;
  out.meridians.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    out.k0_framing = checked_add(out.k0_framing, k[i]);
    out.meridians.push_back(diag.meridians[i].twisted(k[i]));
  }
  return out;
}

SurgeryDiagram insert_trivial_meridian(const SurgeryDiagram& diag) {
  SurgeryDiagram out = diag;
  out.meridians.push_back(SurgeryCoefficient::infinity());
  return out;
}

SurgeryDiagram delete_trivial_meridian(const SurgeryDiagram& diag, std::size_t index) {
  if (index >= diag.meridians.size()) throw std::invalid_argument("meridian index out of range");
  if (!diag.meridians[index].is_infinite()) throw std::invalid_argument("only infinity-framed meridians can be removed");
  SurgeryDiagram out = diag;
  out.meridians.erase(out.meridians.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

SurgeryDiagram permute_meridians(const SurgeryDiagram& diag, const std::vector<std::size_t>& order) {
  if (order.size() != diag.meridians.size()) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(order.size(), false);
  SurgeryDiagram out;
  out.k0_framing = diag.k0_framing;
  for (std::size_t i : order) {
    if (i >= order.size() || seen[i]) throw std::invalid_argument("not a permutation");
    seen[i] = true;
    out.meridians.push_back(diag.meridians[i]);
  }
  return out;
}

std::string export_text(const SurgeryDiagram& diag) {
  if (!diag.exportable()) {
    throw std::invalid_argument("K0 has framing " + std::to_string(diag.k0_framing) + "; only 0-framed diagrams export");
  }
  std::ostringstream os;
  os << diag;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SurgeryDiagram& diag) {
  os << "K0[" << diag.k0_framing << "]";
  for (std::size_t i = 0; i < diag.meridians.size(); ++i) {
    os << (i ? ", " : "; ") << "m" << (i + 1) << "[" << diag.meridians[i].to_string() << "]";
  }
  return os;
}

}  // namespace seifsec
