#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torus/error.hpp"
#include "torus/serialize.hpp"

using namespace torus;
using namespace torus::testing;

TEST_CASE("CycNum documents") {
  const CycNum c = CycNum::root(4, 1) * CycNum(Rational(mpz_class(-3), mpz_class(2))) + CycNum(1);
  const Json j = to_json(c);
  CHECK(j.dump() == R"({"N":4,"coords":[["1","1"],["-3","2"]]})");
  CHECK(cycnum_from_json(j) == c);
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 40);
  const CycNum big = CycNum(Rational(huge, mpz_class(7))) * CycNum::root(5, 2);
  CHECK(cycnum_from_json(Json::parse(to_json(big).dump())) == big);
}

TEST_CASE("round trips through text") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Mat2 m{random_lpoly(rng, 40), random_lpoly(rng, 40), random_lpoly(rng, 12), random_lpoly(rng, 1)};
    REQUIRE(mat2_from_json(Json::parse(to_json(m).dump())) == m);
  }
  const Rep r = Rep::rho3(7, 5);
  const Mat2 img = encode(r, random_word(7, 5, 150, 1, 4));
  CHECK(mat2_from_json(Json::parse(to_json(img).dump())) == img);
}

TEST_CASE("terms serialize in (t, q) order") {
  const LPoly p = LPoly::q(2) + LPoly::t(-1) + LPoly::monomial(CycNum(5), 0, -3);
  const Json j = to_json(p);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["t"] == -1);
  CHECK(j["terms"][1]["q"] == -3);
  CHECK(j["terms"][2]["q"] == 2);
}

TEST_CASE("normal forms and closure results") {
  CHECK(to_json(normalize(parse_word("Y X^5 Y^2", 3, 4))).dump() == R"({"delta":1,"syllables":[["Y",1],["X",1],["Y",2]]})");
  CHECK(to_json(ClosureResult{48, 10000, {}}).dump() == R"({"order":48})");
  CHECK(to_json(ClosureResult{std::nullopt, 500, {}}).dump() == R"({"cap_exceeded":500})");
}

TEST_CASE("reports") {
  const Json f = to_json(verify_fund(Rep::rho3(3, 4)));
  CHECK(f["passed"] == true);
  CHECK(f["checks"].size() == 1 + 3 + 2);
  const Json r = to_json(Rep::rho3(3, 5));
  CHECK(r["a"] == 2);
  CHECK(r["b"] == 1);
  CHECK(r["N"] == 60);
  CHECK(mat2_from_json(r["MX"]) == Rep::rho3(3, 5).mx());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS((void)cycnum_from_json(Json::parse(R"({"N":4})")), Error);
  CHECK_THROWS_AS((void)cycnum_from_json(Json::parse(R"({"N":4,"coords":[["1","1"]]})")), Error);
  CHECK_THROWS_AS((void)cycnum_from_json(Json::parse(R"({"N":1,"coords":[["1","0"]]})")), Error);
  CHECK_THROWS_AS((void)cycnum_from_json(Json::parse(R"({"N":1,"coords":[[1,1]]})")), Error);
  CHECK_THROWS_AS((void)mat2_from_json(Json::parse(R"({"a11":{"terms":[]}})")), Error);
}

TEST_CASE("text rendering") {
  CHECK(to_text(CycNum(0)) == "0");
  CHECK(to_text(CycNum::root(8, 3) - CycNum(2)) == "-2 + z8^3");
  CHECK(to_text(LPoly::q(-2) - LPoly::t()) == "q^-2 - t");
  CHECK(to_text(Mat2::identity()) == "[[1, 0], [0, 1]]");
  const LPoly p = LPoly::monomial(CycNum::root(4, 1) + CycNum(1), 1, 1);
  CHECK(to_text(p) == "(1 + z4)*t*q");
}
