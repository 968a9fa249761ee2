#include <doctest.h>

#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "seifsec/seifert.hpp"

using namespace seifsec;

namespace {

std::vector<oracle::Pair> to_oracle(const SeifertData& m) {
  std::vector<oracle::Pair> out;
  for (const auto& p : m.pairs()) out.push_back({p.alpha, p.beta});
  return out;
}

Rational oracle_euler(const SeifertData& m) {
  auto [num, den] = oracle::euler(to_oracle(m));
  return Rational(num, den);
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(floor_div(-7, 3) == -3);
  CHECK(floor_div(7, 3) == 2);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(6, 3) == 0);
  CHECK(lcm(4, 6) == 12);

  const Bezout bz = extended_gcd(240, 46);
  CHECK(bz.g == 2);
  CHECK(240 * bz.x + 46 * bz.y == 2);
  CHECK(extended_gcd(-9, 6).g == 3);

  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(-1, 5) == 4);
  CHECK(mod_inverse(5, 1) == 0);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);

  CHECK_THROWS_AS(checked_mul(Int{1} << 40, Int{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(-3, -6).to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS(Rational(1, 0));

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-1, 3) < Rational(-1, 4));
  CHECK(Rational(6, 3).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(6, 3).as_int64("x") == 2);
  CHECK_THROWS_AS(Rational(1, 2).as_int64("x"), std::domain_error);
  CHECK_FALSE(Rational(1, 2).to_int64().has_value());

  // Products that leave int64 range are still exact.
  Rational big(INT64_MAX);
  Rational sq = big * big;
  CHECK(sq / big == big);
  CHECK_FALSE(sq.to_int64().has_value());
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(SeifertData(0, {{2, 1}, {3, -1}})) == Rational(-1, 6));
  CHECK(euler_number(SeifertData(0, {{1, 1}})) == Rational(-1));
  CHECK(euler_number(SeifertData(0, {{2, -1}})) == Rational(1, 2));
  CHECK(euler_number(SeifertData(3, {})) == Rational(0));
  const SeifertData m(0, {{2, 1}, {3, -1}});
  CHECK(euler_number(normalize(m)) == euler_number(m));
}

TEST_CASE("normal forms") {
  const NormalForm nf = normalize(SeifertData(0, {{2, 1}, {3, -1}}));
  CHECK(nf.base_genus == 0);
  CHECK(nf.b == -1);
  CHECK(nf.singular_pairs == std::vector<ExceptionalPair>{{2, 1}, {3, 2}});
  CHECK(to_string(nf) == "M(0; (1,-1), (2,1), (3,2))");

  // (1,0) and (1,1) collapse to b = 1, the Hopf fibration.
  const NormalForm hopf = normalize(SeifertData(0, {{1, 0}, {1, 1}}));
  CHECK(hopf.b == 1);
  CHECK(hopf.singular_pairs.empty());
  CHECK(is_isomorphic(SeifertData(0, {{1, 0}, {1, 1}}), SeifertData(0, {{1, 1}})));

  CHECK(normalize(SeifertData(0, {{5, 12}, {5, -12}})).b == -1);
  CHECK_FALSE(is_isomorphic(SeifertData(0, {{2, 1}}), SeifertData(1, {{2, 1}})));
  CHECK_FALSE(is_isomorphic(SeifertData(0, {{3, 1}}), SeifertData(0, {{3, 2}})));

  CHECK(to_seifert(nf) == SeifertData(0, {{1, -1}, {2, 1}, {3, 2}}));
  CHECK(to_seifert(normalize(SeifertData(0, {{2, 1}}))) == SeifertData(0, {{2, 1}}));
}

TEST_CASE("parsing and printing") {
  CHECK(parse_seifert("M(0;(2,1),(3,-1))") == SeifertData(0, {{2, 1}, {3, -1}}));
  CHECK(parse_seifert("  M ( 0 ; ( 2 , 1 ) , ( 3 , -1 ) ) ") == SeifertData(0, {{2, 1}, {3, -1}}));
  CHECK(parse_seifert("M(1;)") == SeifertData(1, {}));
  CHECK(to_string(SeifertData(0, {{2, 1}, {3, -1}})) == "M(0; (2,1), (3,-1))");
  CHECK(to_string(SeifertData(1, {})) == "M(1;)");

  try {
    parse_seifert("M(0;(2,1)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
    CHECK(std::string(e.what()).find("column 10") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_seifert("M(0;(2,1)) x"), ParseError);
  CHECK_THROWS_AS(parse_seifert("N(0;)"), ParseError);
  CHECK_THROWS_AS(parse_seifert("M(0;(a,1))"), ParseError);

  try {
    parse_seifert("M(0;(2,2))");
    FAIL("expected invalid invariants");
  } catch (const InvalidInvariants& e) {
    CHECK(std::string(e.what()).find("gcd(2,2) = 2") != std::string::npos);
  }
  CHECK_THROWS_AS(SeifertData(0, {{0, 1}}), InvalidInvariants);
  CHECK_THROWS_AS(SeifertData(-1, {}), InvalidInvariants);
}

TEST_CASE("moves") {
  const SeifertData m(0, {{2, 1}, {3, -1}});
  CHECK(apply_move(m, moves::Permute{{1, 0}}) == SeifertData(0, {{3, -1}, {2, 1}}));
  CHECK(apply_move(m, moves::InsertTrivial{}) == SeifertData(0, {{2, 1}, {3, -1}, {1, 0}}));
  CHECK(apply_move(apply_move(m, moves::InsertTrivial{}), moves::DeleteTrivial{2}) == m);
  CHECK(apply_move(m, moves::Twist{{1, -1}}) == SeifertData(0, {{2, 3}, {3, -4}}));

  CHECK_THROWS_AS(apply_move(m, moves::Twist{{1, 1}}), InvalidMove);
  CHECK_THROWS_AS(apply_move(m, moves::Twist{{1}}), InvalidMove);
  CHECK_THROWS_AS(apply_move(m, moves::DeleteTrivial{0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(m, moves::Permute{{0, 0}}), InvalidMove);
  CHECK_FALSE(describe(moves::Twist{{1, -1}}).empty());
}

TEST_CASE("property: euler number and normal form against the reference") {
  gen::Source src(0x5e1f);
  for (int trial = 0; trial < 3000; ++trial) {
    const SeifertData m = src.seifert(3, 6, 30, 60);
    CAPTURE(to_string(m));
    CHECK(euler_number(m) == oracle_euler(m));

    const auto ref = oracle::normalize(m.base_genus(), to_oracle(m));
    const NormalForm nf = normalize(m);
    REQUIRE(nf.singular_pairs.size() == ref.singular.size());
    CHECK(nf.b == ref.b);
    for (std::size_t i = 0; i < ref.singular.size(); ++i) {
      CHECK(nf.singular_pairs[i].alpha == ref.singular[i].alpha);
      CHECK(nf.singular_pairs[i].beta == ref.singular[i].beta);
    }
    CHECK(parse_seifert(to_string(m)) == m);
    CHECK(normalize(to_seifert(nf)) == nf);
  }
}

TEST_CASE("property: moves preserve the normal form") {
  gen::Source src(77);
  for (int trial = 0; trial < 2000; ++trial) {
    SeifertData m = src.seifert(2, 5, 20, 40);
    const NormalForm before = normalize(m);
    for (int step = 0; step < 6; ++step) m = apply_move(m, src.move(m));
    CAPTURE(to_string(m));
    CHECK(normalize(m) == before);
  }
}
