#include "seifsec/sections.hpp"

#include <stdexcept>

namespace seifsec {

namespace {

using Wide = __int128;

Int narrow(Wide v, const char* what) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN)) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<Int>(v);
}

void require_positive_d(Int d) {
  if (d <= 0) throw std::invalid_argument("section multiplicity d must be positive");
}

[[noreturn]] void sentinel_failure(const std::string& what, const Rational& value, const SeifertData& m, Int d) {
  throw std::logic_error("integrality sentinel: " + what + " = " + value.to_string() + " for " + to_string(m) +
                         ", d = " + std::to_string(d));
}

}  // namespace

// ---------------------------------------------------------------------------
// 1-sections

Int OneSectionResult::free_sign_fibres() const {
  Int n = 0;
  for (const auto& s : singular_signs) n += (s.positive && s.negative) ? 1 : 0;
  return n;
}

bool OneSectionResult::realizable(Int b_plus, Int b_minus) const {
  if (!exists || b_plus < 0 || b_minus < 0) return false;
  Int shift = b_plus - b_minus - net_regular_boundary;
  return shift >= 0 && shift <= free_sign_fibres();
}

Int OneSectionResult::boundary_count(Int b_plus, Int b_minus) const {
  return static_cast<Int>(singular_signs.size()) + b_plus + b_minus;
}

OneSectionResult classify_one_section(const SeifertData& m) {
  OneSectionResult r;
  r.genus = m.base_genus();
  Int net = 0;
  const auto& pairs = m.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.alpha == 1) {
      net = checked_add(net, p.beta);
      continue;
    }
    Int res = floor_mod(p.beta, p.alpha);
    BoundarySigns s{i, res == 1, res == p.alpha - 1};
    if (!s.positive && !s.negative) {
      r.exists = false;
      r.obstructing_pair = i;
      r.singular_signs.clear();
      r.net_regular_boundary = 0;
      return r;
    }
    // Twist (alpha, beta) to (alpha, +-1); the multiple of alpha moves into (1, b).
    int sign = s.positive ? 1 : -1;
    net = checked_add(net, (p.beta - sign) / p.alpha);
    r.singular_signs.push_back(s);
  }
  r.exists = true;
  r.net_regular_boundary = net;
  return r;
}

// ---------------------------------------------------------------------------
// Necessary condition

std::vector<PairVerdict> d_section_necessary(const SeifertData& m, Int d) {
  require_positive_d(d);
  std::vector<PairVerdict> out;
  out.reserve(m.size());
  for (const auto& p : m.pairs()) {
    PairVerdict v;
    if (d % p.alpha == 0) {
      v.kind = PairVerdict::Kind::Interior;
    } else {
      Wide db = static_cast<Wide>(d) * p.beta;
      v.positive = (db - 1) % p.alpha == 0;
      v.negative = (db + 1) % p.alpha == 0;
      v.kind = (v.positive || v.negative) ? PairVerdict::Kind::Boundary : PairVerdict::Kind::Obstructed;
    }
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Positive d-sections

std::optional<Int> SectionReport::genus() const {
  if (const auto* c = std::get_if<ConnectedSurface>(&topology)) return c->genus;
  return std::nullopt;
}

PositiveSectionResult classify_positive_d_section(const SeifertData& m, Int d) {
  require_positive_d(d);
  const auto& pairs = m.pairs();

  SectionReport r;
  r.d = d;
  r.fiber_roles.reserve(pairs.size());
  Wide b_bar = 0;

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    Wide db = static_cast<Wide>(d) * p.beta;
    if (d % p.alpha == 0) {
      r.fiber_roles.push_back(FiberRole::interior(d / p.alpha));
      b_bar += db / p.alpha;
      continue;
    }
    if ((db - 1) % p.alpha == 0) {
      Wide a = (db - 1) / p.alpha;
      r.fiber_roles.push_back(FiberRole::boundary(+1));
      r.boundary_pairs.push_back(i);
      r.epsilons.push_back(+1);
      r.a_coeffs.push_back(narrow(a, "a_i"));
      b_bar += a;
      continue;
    }
    SectionObstruction ob;
    ob.pair_index = i;
    std::string where = "pair " + std::to_string(i + 1) + " (" + std::to_string(p.alpha) + "," +
                        std::to_string(p.beta) + ")";
    if ((db + 1) % p.alpha == 0) {
      ob.kind = SectionObstruction::Kind::NegativeBoundary;
      ob.message = where + " can only be a negative boundary fibre";
    } else {
      ob.kind = SectionObstruction::Kind::NotDivisible;
      ob.message = where + ": alpha divides none of d, d*beta-1, d*beta+1";
    }
    return ob;
  }

  r.b_bar = narrow(b_bar, "b_bar");
  if (r.b_bar < 0) {
    SectionObstruction ob;
    ob.kind = SectionObstruction::Kind::NegativeBBar;
    ob.b_bar = r.b_bar;
    ob.message = "b_bar = " + std::to_string(r.b_bar) + " < 0";
    return ob;
  }

  const Rational e = euler_number(m);
  const Rational dd(d);
  Rational sum_inv_all;         // sum over all pairs of 1/alpha
  Rational sum_inv_boundary;    // sum over alpha !| d of 1/alpha
  Rational boundary_defect;     // sum over alpha !| d of (1 - 1/alpha)
  for (const auto& p : pairs) {
    Rational inv(1, p.alpha);
    sum_inv_all += inv;
    if (d % p.alpha != 0) {
      sum_inv_boundary += inv;
      boundary_defect += Rational(1) - inv;
    }
  }

  r.ob_lhs = dd * e + sum_inv_boundary;
  if (!r.ob_lhs.is_integer() || r.ob_lhs != Rational(-r.b_bar)) sentinel_failure("obstruction value", r.ob_lhs, m, d);

  r.boundary_value = -dd * e + boundary_defect;
  r.boundary_count = r.b_bar + r.singular_boundary_count();
  if (!r.boundary_value.is_integer() || r.boundary_value != Rational(r.boundary_count)) {
    sentinel_failure("boundary count", r.boundary_value, m, d);
  }

  if (r.boundary_count == 0) {
    r.topology = ClosedUndeterminedComponents{rh_quotient_chi(m, d, r)};
    return r;
  }

  const Rational n(static_cast<Int>(pairs.size()));
  const Rational g(m.base_genus());
  Rational inner = Rational(2) - Rational(2) * g + (dd - Rational(1)) * e + sum_inv_all - n;
  Rational genus = (Rational(2) - dd * inner - boundary_defect) / Rational(2);
  r.genus_value = genus;
  if (!genus.is_integer() || genus.sign() < 0) sentinel_failure("genus", genus, m, d);
  r.topology = ConnectedSurface{genus.as_int64("genus")};
  return r;
}

std::optional<Int> minimal_positive_d(const SeifertData& m, Int d_max) {
  if (d_max < 1) throw std::invalid_argument("d_max must be positive");
  for (Int d = 1; d <= d_max; ++d) {
    if (exists(classify_positive_d_section(m, d))) return d;
  }
  return std::nullopt;
}

Int rh_quotient_chi(const SeifertData& m, Int d, const SectionReport& report) {
  require_positive_d(d);
  const auto& pairs = m.pairs();
  if (report.d != d) throw std::invalid_argument("report was produced for a different d");
  if (report.fiber_roles.size() != pairs.size()) throw std::invalid_argument("report does not match pair count");
  if (report.epsilons.size() != report.boundary_pairs.size() || report.a_coeffs.size() != report.boundary_pairs.size()) {
    throw std::invalid_argument("report boundary data is inconsistent");
  }

  Int k = 0;
  Wide interior_points = 0;  // sum over alpha | d of d / alpha
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& role = report.fiber_roles[i];
    const bool divides_d = d % pairs[i].alpha == 0;
    if (role.is_boundary()) {
      if (divides_d || role.sign != 1) throw std::invalid_argument("report boundary role inconsistent with pair");
      ++k;
    } else {
      if (!divides_d || role.intersections != d / pairs[i].alpha) {
        throw std::invalid_argument("report interior role inconsistent with pair");
      }
      interior_points += d / pairs[i].alpha;
    }
  }
  if (k != report.singular_boundary_count()) throw std::invalid_argument("report boundary count inconsistent");

  // Each capping disc is a single branch point of index d; each interior
  // fibre with alpha | d contributes d / alpha points of index alpha over one
  // point of the capped base.
  const Wide n = static_cast<Wide>(pairs.size());
  const Wide caps = static_cast<Wide>(report.b_bar) + k;
  Wide chi = static_cast<Wide>(d) * (2 - 2 * static_cast<Wide>(m.base_genus()) - caps - (n - k)) + caps +
             interior_points;
  return narrow(chi, "euler characteristic");
}

std::string to_string(FiberRole::Kind k) { return k == FiberRole::Kind::Boundary ? "boundary" : "interior"; }

std::string to_string(const FiberRole& role) {
  if (role.is_boundary()) return role.sign > 0 ? "boundary+" : "boundary-";
  return "interior:" + std::to_string(role.intersections);
}

std::string to_string(SectionObstruction::Kind k) {
  switch (k) {
    case SectionObstruction::Kind::NotDivisible: return "not_divisible";
    case SectionObstruction::Kind::NegativeBoundary: return "negative_boundary";
    case SectionObstruction::Kind::NegativeBBar: return "negative_b_bar";
  }
  return "unknown";
}

}  // namespace seifsec
