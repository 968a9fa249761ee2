#include "seifsec/wps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace seifsec {

void validate(const WeightedPlane& p) {
  if (p.a0 < 1 || p.a1 < 1 || p.a2 < 1) throw std::invalid_argument("weights must be positive");
  if (gcd(p.a0, p.a1) != 1 || gcd(p.a0, p.a2) != 1 || gcd(p.a1, p.a2) != 1) {
    throw std::invalid_argument("weights must be pairwise coprime");
  }
}

Rational degree_genus(const WeightedPlane& p, Int d) {
  validate(p);
  if (d < 1) throw std::invalid_argument("degree must be positive");
  const Int a[3] = {p.a0, p.a1, p.a2};
  const Rational dd(d);

  Rational value = dd * dd / (Rational(p.a0) * Rational(p.a1) * Rational(p.a2));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      value -= dd * Rational(gcd(a[i], a[j])) / (Rational(a[i]) * Rational(a[j]));
    }
  }
  for (int i = 0; i < 3; ++i) value += Rational(gcd(a[i], d), a[i]);
  value -= Rational(1);
  return value / Rational(2);
}

std::vector<DegreeRepresentation> admissible_degrees(Int alpha1, Int alpha2, Int d_max) {
  if (alpha1 < 1 || alpha2 < 1 || gcd(alpha1, alpha2) != 1) {
    throw std::invalid_argument("weights must be coprime positive integers");
  }
  const Int n = checked_mul(alpha1, alpha2);
  std::vector<DegreeRepresentation> out;
  for (int e1 = 0; e1 <= 1; ++e1) {
    for (int e2 = 0; e2 <= 1; ++e2) {
      const Int offset = e1 * alpha1 + e2 * alpha2;
      for (Int k = 0; offset + k * n <= d_max; ++k) {
        if (k + e1 + e2 == 0) continue;
        out.push_back({offset + k * n, k, e1, e2});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.d, x.k, x.eps1, x.eps2) < std::tie(y.d, y.k, y.eps1, y.eps2);
  });
  return out;
}

Int CurveSpec::degree() const {
  return checked_add(checked_mul(k_factors(), checked_mul(alpha1, alpha2)), eps1 * alpha1 + eps2 * alpha2);
}

namespace {

BigInt ipow(Int base, Int exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

std::string point_text(const WeightedPoint& p) { return "[" + std::to_string(p.a) + ":" + std::to_string(p.b) + "]"; }

}  // namespace

bool same_weighted_point(const WeightedPoint& p, const WeightedPoint& q, Int alpha1, Int alpha2) {
  // [a:b] ~ [t^alpha1 a : t^alpha2 b]; the factor b^alpha1 z1^alpha2 - a^alpha2 z2^alpha1
  // determines the point, so compare the coefficient vectors projectively.
  return ipow(p.a, alpha2) * ipow(q.b, alpha1) == ipow(q.a, alpha2) * ipow(p.b, alpha1);
}

void validate(const CurveSpec& c) {
  if (c.alpha1 < 1 || c.alpha2 < 1 || gcd(c.alpha1, c.alpha2) != 1) {
    throw std::invalid_argument("weights must be coprime positive integers");
  }
  if ((c.eps1 != 0 && c.eps1 != 1) || (c.eps2 != 0 && c.eps2 != 1)) {
    throw std::invalid_argument("eps1 and eps2 must be 0 or 1");
  }
  if (c.roots.empty() && c.eps1 + c.eps2 == 0) throw std::invalid_argument("k = 0 requires eps1 + eps2 >= 1");
  for (std::size_t i = 0; i < c.roots.size(); ++i) {
    const auto& r = c.roots[i];
    if (r.a == 0 || r.b == 0) {
      throw std::invalid_argument("root " + point_text(r) + " must differ from [1:0] and [0:1]");
    }
    if (gcd(r.a, r.b) != 1) throw std::invalid_argument("root " + point_text(r) + " is not a coprime pair");
    for (std::size_t j = 0; j < i; ++j) {
      if (same_weighted_point(c.roots[j], r, c.alpha1, c.alpha2)) {
        throw std::invalid_argument("repeated root " + point_text(c.roots[j]) + " = " + point_text(r) +
                                    ": f has a repeated factor and the curve is singular");
      }
    }
  }
}

CurveSectionSummary curve_section_correspondence(const CurveSpec& c) {
  validate(c);
  CurveSectionSummary s;
  s.d = c.degree();
  // z1 | f: the point [0:0:1] at infinity lies on the curve, so C2 = {z1 = 0} is a boundary fibre.
  // z2 | f: likewise [0:1:0] and C1 = {z2 = 0}.
  const bool c2_at_infinity = c.eps1 == 1;
  const bool c1_at_infinity = c.eps2 == 1;
  s.c1_in_boundary = c1_at_infinity && c.alpha1 > 1;
  s.c2_in_boundary = c2_at_infinity && c.alpha2 > 1;
  s.regular_boundary = c.k_factors() + ((c1_at_infinity && c.alpha1 == 1) ? 1 : 0) +
                       ((c2_at_infinity && c.alpha2 == 1) ? 1 : 0);
  s.boundary_count = s.regular_boundary + (s.c1_in_boundary ? 1 : 0) + (s.c2_in_boundary ? 1 : 0);
  s.genus = degree_genus({1, c.alpha1, c.alpha2}, s.d);
  return s;
}

bool matches(const CurveSectionSummary& s, const TableRow& row) {
  return s.d == row.d && s.boundary_count == row.boundary_count && s.c1_in_boundary == row.c1_in_boundary &&
         s.c2_in_boundary == row.c2_in_boundary && s.genus == Rational(row.genus);
}

}  // namespace seifsec
