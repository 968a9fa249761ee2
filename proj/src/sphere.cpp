#include "seifsec/sphere.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace seifsec {

SeifertData SphereFibration::seifert() const { return SeifertData(0, {{alpha1, beta1}, {alpha2, beta2}}); }

void validate(const SphereFibration& f) {
  if (f.alpha1 < 1 || f.alpha2 < 1) throw std::invalid_argument("sphere weights must be positive");
  if (gcd(f.alpha1, f.alpha2) != 1) {
    throw std::invalid_argument("sphere weights must be coprime: gcd(" + std::to_string(f.alpha1) + "," +
                                std::to_string(f.alpha2) + ") = " + std::to_string(gcd(f.alpha1, f.alpha2)));
  }
  if (checked_add(checked_mul(f.alpha1, f.beta2), checked_mul(f.alpha2, f.beta1)) != 1) {
    throw std::invalid_argument("sphere fibration requires alpha1*beta2 + alpha2*beta1 = 1");
  }
}

SphereFibration sphere_from_weights(Int alpha1, Int alpha2) {
  if (alpha1 < 1 || alpha2 < 1) throw std::invalid_argument("sphere weights must be positive");
  if (gcd(alpha1, alpha2) != 1) {
    throw std::invalid_argument("sphere weights must be coprime: gcd(" + std::to_string(alpha1) + "," +
                                std::to_string(alpha2) + ") = " + std::to_string(gcd(alpha1, alpha2)));
  }
  // alpha2 * beta1 = 1 (mod alpha1) fixes beta1 in [0, alpha1).
  SphereFibration f;
  f.alpha1 = alpha1;
  f.alpha2 = alpha2;
  f.beta1 = mod_inverse(alpha2, alpha1);
  f.beta2 = (1 - checked_mul(alpha2, f.beta1)) / alpha1;
  validate(f);
  return f;
}

std::optional<SphereFibration> recognize_sphere(const SeifertData& m) {
  const NormalForm nf = normalize(m);
  if (nf.base_genus != 0 || nf.singular_pairs.size() > 2) return std::nullopt;
  Int a1 = 1;
  Int a2 = 1;
  if (nf.singular_pairs.size() >= 1) a2 = nf.singular_pairs[0].alpha;
  if (nf.singular_pairs.size() == 2) {
    a1 = nf.singular_pairs[0].alpha;
    a2 = nf.singular_pairs[1].alpha;
  }
  if (gcd(a1, a2) != 1) return std::nullopt;
  SphereFibration f = sphere_from_weights(a1, a2);
  if (normalize(f.seifert()) != nf) return std::nullopt;
  return f;
}

void BranchProfile::add(Int count, Int index) {
  if (count < 0 || index < 1) throw std::invalid_argument("branch profile entries need count >= 0 and index >= 1");
  if (count == 0 || index == 1) return;
  entries.push_back({count, index});
}

Int BranchProfile::total_ramification() const {
  Int total = 0;
  for (const auto& e : entries) total = checked_add(total, checked_mul(e.count, e.index - 1));
  return total;
}

std::string to_string(SphereFamily f) {
  switch (f) {
    case SphereFamily::Regular: return "regular";
    case SphereFamily::C1Boundary: return "C1-boundary";
    case SphereFamily::C2Boundary: return "C2-boundary";
    case SphereFamily::BothBoundary: return "C1C2-boundary";
  }
  return "unknown";
}

namespace {

constexpr std::array kFamilies = {SphereFamily::Regular, SphereFamily::C1Boundary, SphereFamily::C2Boundary,
                                  SphereFamily::BothBoundary};

Int family_offset(const SphereFibration& f, SphereFamily family) {
  switch (family) {
    case SphereFamily::Regular: return 0;
    case SphereFamily::C1Boundary: return f.alpha2;
    case SphereFamily::C2Boundary: return f.alpha1;
    case SphereFamily::BothBoundary: return f.alpha1 + f.alpha2;
  }
  return 0;
}

bool family_allowed(const SphereFibration& f, SphereFamily family) {
  switch (family) {
    case SphereFamily::Regular: return true;
    case SphereFamily::C1Boundary: return f.alpha1 > 1;
    case SphereFamily::C2Boundary: return f.alpha2 > 1;
    case SphereFamily::BothBoundary: return f.alpha1 > 1 && f.alpha2 > 1;
  }
  return false;
}

Int half_exact(Int twice, const char* what) {
  if (twice % 2 != 0) throw std::logic_error(std::string(what) + ": odd numerator in genus formula");
  return twice / 2;
}

}  // namespace

std::optional<TableRow> table_row(const SphereFibration& f, SphereFamily family, Int k_param) {
  validate(f);
  if (!family_allowed(f, family)) return std::nullopt;
  if (k_param < 0 || (family == SphereFamily::Regular && k_param < 1)) return std::nullopt;

  const Int k = k_param;
  const Int a1 = f.alpha1;
  const Int a2 = f.alpha2;
  TableRow row;
  row.family = family;
  row.k_param = k;
  row.d = checked_add(checked_mul(k, checked_mul(a1, a2)), family_offset(f, family));
  Int twice_genus = 0;
  switch (family) {
    case SphereFamily::Regular:
      row.boundary_count = k;
      twice_genus = (k * a1 - 1) * (k * a2 - 1) + 1 - k;
      break;
    case SphereFamily::C1Boundary:
      row.boundary_count = k + 1;
      row.c1_in_boundary = true;
      twice_genus = (k * a1 + 1) * (k * a2 - 1) + 1 - k;
      break;
    case SphereFamily::C2Boundary:
      row.boundary_count = k + 1;
      row.c2_in_boundary = true;
      twice_genus = (k * a1 - 1) * (k * a2 + 1) + 1 - k;
      break;
    case SphereFamily::BothBoundary:
      row.boundary_count = k + 2;
      row.c1_in_boundary = true;
      row.c2_in_boundary = true;
      twice_genus = (k * a1 + 1) * (k * a2 + 1) - 1 - k;
      break;
  }
  row.genus = half_exact(twice_genus, "table row");
  return row;
}

std::optional<TableRow> admissible_d(const SphereFibration& f, Int d) {
  validate(f);
  if (d < 1) return std::nullopt;
  const Int n = checked_mul(f.alpha1, f.alpha2);
  for (SphereFamily family : kFamilies) {
    if (!family_allowed(f, family)) continue;
    Int rest = d - family_offset(f, family);
    if (rest < 0 || rest % n != 0) continue;
    if (auto row = table_row(f, family, rest / n)) return row;
  }
  return std::nullopt;
}

std::vector<TableRow> table_rows(const SphereFibration& f, Int k_max) {
  std::vector<TableRow> rows;
  for (Int k = 0; k <= k_max; ++k) {
    for (SphereFamily family : kFamilies) {
      if (auto row = table_row(f, family, k)) rows.push_back(*row);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.d < b.d; });
  return rows;
}

BranchProfile hopf_lift_profile(const SphereFibration& f, const TableRow& row) {
  validate(f);
  if (admissible_d(f, row.d) != row) throw std::invalid_argument("table row does not belong to this fibration");
  const Int a1 = f.alpha1;
  const Int a2 = f.alpha2;
  const Int d = row.d;
  BranchProfile p;
  p.sheet_count = checked_mul(a1, a2);
  // An exceptional fibre C_i in the boundary lifts to a_j Hopf fibres, each an
  // a_i-fold cover of C_i; after capping these are a_j points of index a_i.
  // Interior intersections of the section with C_i give d points of index a_j.
  // Desingularising the lift near a boundary C_i adds d points of index a_j
  // on the fibre through the perturbation point.
  if (row.c1_in_boundary) {
    p.add(a2, a1);
    p.add(d, a2);
  } else {
    p.add(d, a2);
  }
  if (row.c2_in_boundary) {
    p.add(a1, a2);
    p.add(d, a1);
  } else {
    p.add(d, a1);
  }
  return p;
}

Int rh_hopf_lift_genus(const SphereFibration& f, const TableRow& row) {
  const BranchProfile p = hopf_lift_profile(f, row);
  const Int d = row.d;
  // Capped positive Hopf d-section: genus (d-1)(d-2)/2.
  const Int chi_up = checked_sub(2, checked_mul(d - 1, d - 2));
  const Int total = checked_add(chi_up, p.total_ramification());
  if (total % p.sheet_count != 0) throw std::logic_error("Riemann-Hurwitz: non-integral Euler characteristic downstairs");
  const Int chi_down = total / p.sheet_count;
  if ((2 - chi_down) % 2 != 0 || chi_down > 2) {
    throw std::logic_error("Riemann-Hurwitz: Euler characteristic " + std::to_string(chi_down) +
                           " is not that of a closed orientable surface");
  }
  return (2 - chi_down) / 2;
}

}  // namespace seifsec
