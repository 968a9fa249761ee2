#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "seifsec/quotient.hpp"
#include "seifsec/sections.hpp"

using namespace seifsec;

namespace {

const SeifertData kHopf(0, {{1, 1}});
const SeifertData kTrefoilish(0, {{2, 1}, {3, -1}});

SectionReport report(const PositiveSectionResult& r) {
  REQUIRE(exists(r));
  return std::get<SectionReport>(r);
}

SectionObstruction obstruction(const PositiveSectionResult& r) {
  REQUIRE_FALSE(exists(r));
  return std::get<SectionObstruction>(r);
}

std::vector<oracle::Pair> to_oracle(const SeifertData& m) {
  std::vector<oracle::Pair> out;
  for (const auto& p : m.pairs()) out.push_back({p.alpha, p.beta});
  return out;
}

}  // namespace

TEST_CASE("quotient examples") {
  CHECK(zd_quotient(kTrefoilish, 2) == SeifertData(0, {{1, 1}, {3, -2}}));
  CHECK(euler_number(zd_quotient(kTrefoilish, 2)) == Rational(-1, 3));
  const SeifertData q6 = zd_quotient(kTrefoilish, 6);
  CHECK(q6 == SeifertData(0, {{1, 3}, {1, -2}}));
  CHECK(normalize(q6).b == 1);
  CHECK(zd_quotient(kTrefoilish, 1) == kTrefoilish);
  CHECK(zd_quotient(SeifertData(2, {{4, 1}}), 6) == SeifertData(2, {{2, 3}}));
  CHECK_THROWS_AS(zd_quotient(kTrefoilish, 0), std::invalid_argument);
  CHECK_THROWS_AS(zd_quotient(kTrefoilish, -3), std::invalid_argument);
}

TEST_CASE("property: quotient scales the euler number") {
  gen::Source src(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const SeifertData m = src.seifert(2, 6, 30, 60);
    const Int d = src.uniform(1, 60);
    CAPTURE(to_string(m));
    CAPTURE(d);
    auto [num, den] = oracle::euler(to_oracle(zd_quotient(m, d)));
    auto [num0, den0] = oracle::euler(to_oracle(m));
    CHECK(Rational(num, den) == Rational(d) * Rational(num0, den0));
  }
}

TEST_CASE("1-sections") {
  const OneSectionResult r = classify_one_section(kTrefoilish);
  REQUIRE(r.exists);
  CHECK(r.genus == 0);
  CHECK(r.net_regular_boundary == 0);
  REQUIRE(r.singular_signs.size() == 2);
  CHECK(r.singular_signs[0].positive);
  CHECK(r.singular_signs[0].negative);
  CHECK_FALSE(r.singular_signs[1].positive);
  CHECK(r.singular_signs[1].negative);
  CHECK(r.free_sign_fibres() == 1);
  CHECK(r.realizable(0, 0));
  CHECK(r.realizable(3, 2));
  CHECK_FALSE(r.realizable(3, 1));
  CHECK_FALSE(r.realizable(0, 1));
  CHECK(r.boundary_count(1, 0) == 3);

  const OneSectionResult hopf = classify_one_section(kHopf);
  CHECK(hopf.exists);
  CHECK(hopf.net_regular_boundary == 1);
  CHECK(hopf.realizable(1, 0));
  CHECK(hopf.realizable(4, 3));

  const OneSectionResult none = classify_one_section(SeifertData(1, {{3, 1}, {5, 2}}));
  CHECK_FALSE(none.exists);
  REQUIRE(none.obstructing_pair.has_value());
  CHECK(*none.obstructing_pair == 1);

  CHECK(classify_one_section(SeifertData(2, {{7, 6}})).genus == 2);
  CHECK(classify_one_section(SeifertData(0, {{7, 6}})).net_regular_boundary == 1);
}

TEST_CASE("necessary condition for general d-sections") {
  const auto v1 = d_section_necessary(kTrefoilish, 1);
  CHECK(v1[0].kind == PairVerdict::Kind::Boundary);
  CHECK(v1[0].positive);
  CHECK(v1[0].negative);
  CHECK(v1[1].kind == PairVerdict::Kind::Boundary);
  CHECK_FALSE(v1[1].positive);
  CHECK(v1[1].negative);

  const auto v6 = d_section_necessary(kTrefoilish, 6);
  CHECK(v6[0].kind == PairVerdict::Kind::Interior);
  CHECK(v6[1].kind == PairVerdict::Kind::Interior);

  CHECK(d_section_necessary(SeifertData(0, {{5, 1}}), 2)[0].kind == PairVerdict::Kind::Obstructed);
  CHECK(d_section_necessary(SeifertData(0, {{1, 7}}), 3)[0].kind == PairVerdict::Kind::Interior);
}

TEST_CASE("Hopf fibration sections") {
  for (Int d = 1; d <= 12; ++d) {
    const auto r = report(classify_positive_d_section(kHopf, d));
    CHECK(r.boundary_count == d);
    CHECK(r.genus() == (d - 1) * (d - 2) / 2);
  }
  CHECK(rh_quotient_chi(kHopf, 4, report(classify_positive_d_section(kHopf, 4))) == -4);
}

TEST_CASE("sections of M(0; (2,1), (3,-1))") {
  const auto r5 = report(classify_positive_d_section(kTrefoilish, 5));
  CHECK(r5.fiber_roles == std::vector<FiberRole>{FiberRole::boundary(1), FiberRole::boundary(1)});
  CHECK(r5.boundary_pairs == std::vector<std::size_t>{0, 1});
  CHECK(r5.epsilons == std::vector<int>{1, 1});
  CHECK(r5.a_coeffs == std::vector<Int>{2, -2});
  CHECK(r5.b_bar == 0);
  CHECK(r5.boundary_count == 2);
  CHECK(r5.genus() == 0);
  CHECK(r5.ob_lhs == Rational(0));

  const auto r6 = report(classify_positive_d_section(kTrefoilish, 6));
  CHECK(r6.fiber_roles == std::vector<FiberRole>{FiberRole::interior(3), FiberRole::interior(2)});
  CHECK(r6.b_bar == 1);
  CHECK(r6.boundary_count == 1);
  CHECK(r6.genus() == 1);
  CHECK(rh_quotient_chi(kTrefoilish, 6, r6) == 0);

  const auto ob4 = obstruction(classify_positive_d_section(kTrefoilish, 4));
  CHECK(ob4.kind == SectionObstruction::Kind::NegativeBoundary);
  CHECK(ob4.pair_index == std::optional<std::size_t>(1));
  CHECK(obstruction(classify_positive_d_section(kTrefoilish, 1)).kind == SectionObstruction::Kind::NegativeBoundary);

  CHECK(minimal_positive_d(kTrefoilish, 100) == std::optional<Int>(2));
  CHECK(minimal_positive_d(kHopf, 100) == std::optional<Int>(1));
}

TEST_CASE("obstructions") {
  const auto nd = obstruction(classify_positive_d_section(SeifertData(0, {{5, 1}}), 2));
  CHECK(nd.kind == SectionObstruction::Kind::NotDivisible);
  CHECK(nd.pair_index == std::optional<std::size_t>(0));
  CHECK(to_string(nd.kind) == "not_divisible");

  const SeifertData positive(0, {{2, -1}});
  const auto bb = obstruction(classify_positive_d_section(positive, 1));
  CHECK(bb.kind == SectionObstruction::Kind::NegativeBBar);
  CHECK(bb.b_bar == -1);
  CHECK(obstruction(classify_positive_d_section(positive, 2)).b_bar == -1);
  CHECK_FALSE(minimal_positive_d(positive, 100).has_value());

  CHECK_THROWS_AS(classify_positive_d_section(kHopf, 0), std::invalid_argument);
}

TEST_CASE("closed sections leave the component count open") {
  const SeifertData flat(0, {{2, 1}, {2, -1}});
  const auto r = report(classify_positive_d_section(flat, 2));
  CHECK(r.boundary_count == 0);
  CHECK_FALSE(r.connected());
  CHECK_FALSE(r.genus().has_value());
  CHECK(std::get<ClosedUndeterminedComponents>(r.topology).euler_characteristic == 2);
  CHECK(rh_quotient_chi(flat, 2, r) == 2);

  // A report from a different d is rejected.
  CHECK_THROWS_AS(rh_quotient_chi(flat, 4, r), std::invalid_argument);
}

TEST_CASE("property: positive sections match the quotient route") {
  gen::Source src(31337);
  int found = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const SeifertData m = src.seifert(2, 4, 12, 20);
    const Int d = src.uniform(1, 30);
    CAPTURE(to_string(m));
    CAPTURE(d);
    const auto ref = oracle::section_via_quotient(m.base_genus(), to_oracle(m), d);
    const auto res = classify_positive_d_section(m, d);
    REQUIRE(exists(res) == ref.exists);
    if (!ref.exists) continue;
    ++found;
    const auto& r = std::get<SectionReport>(res);
    CHECK(r.boundary_count == ref.boundary);
    CHECK(r.genus() == ref.genus);
    CHECK(rh_quotient_chi(m, d, r) == ref.chi);
    CHECK(r.ob_lhs == Rational(-r.b_bar));
    CHECK(r.boundary_value == Rational(r.boundary_count));
    if (r.genus_value) CHECK(*r.genus_value == Rational(*r.genus()));
    // The quotient carries a 1-section whose regular boundary count is b_bar.
    const auto one = classify_one_section(zd_quotient(m, d));
    CHECK(one.exists);
  }
  CHECK(found > 100);
}
