#include "doctest.h"

#include "schubert/action.hpp"
#include "schubert/format.hpp"
#include "schubert/parse.hpp"

using namespace schubert;

namespace {
RingElement e(int k) { return RingElement::elementary(2, k); }
}

TEST_CASE("ring text") {
  HSequence H(2);
  CHECK(to_text(H.h(3)) == "e1^3 - 2*e1*e2");
  CHECK(to_text(H.h(2)) == "e1^2 - e2");
  CHECK(to_text(RingElement::zero(2)) == "0");
  CHECK(to_text(RingElement::one(2)) == "1");
  CHECK(to_text(-RingElement::one(2)) == "-1");
  CHECK(to_text(e(2) * Int(-1)) == "-e2");
  CHECK(to_text(RingElement::constant(2, Int(4)) - e(1)) == "-e1 + 4");
}

TEST_CASE("schur text") {
  SchurExpansion x(2, std::nullopt);
  x.add(Partition{2, 1}, Int(1));
  x.add(Partition{3}, Int(-2));
  CHECK(to_text(x) == "-2*S(3) + S(2,1)");
  SchurExpansion vac(2, std::nullopt);
  vac.add(Partition{}, Int(1));
  CHECK(to_text(vac) == "S()");
  CHECK(to_text(SchurExpansion(2, std::nullopt)) == "0");
}

TEST_CASE("series text") {
  LaurentWindow s(Window{0, 2, -kNoBound, 0});
  s.add(0, 0, RingElement::one(2));
  s.add(1, -1, e(2));
  std::string text = to_text(s);
  CHECK(text.find("window: zlo=0 zhi=2 wlo=-inf whi=0") != std::string::npos);
  CHECK(text.find("z^0 w^0: 1") != std::string::npos);
  CHECK(text.find("z^1 w^-1: e2") != std::string::npos);
}

TEST_CASE("latex") {
  HSequence H(2);
  CHECK(to_latex(schur_determinant(Partition{3, 1}, H)) ==
        "e_1^{2}e_2 - e_2^{2}");
  SchurExpansion x(2, std::nullopt);
  x.add(Partition{2, 1}, Int(1));
  CHECK(to_latex(x) == "\\Delta_{(2,1)}");
  x.add(Partition{}, Int(-3));
  CHECK(to_latex(x) == "-3\\Delta_{\\varnothing} + \\Delta_{(2,1)}");
}

TEST_CASE("json round trips") {
  HSequence H(2);
  RingElement p = H.h(4) * Int(-7) + RingElement::one(2);
  nlohmann::json jp = to_json(p);
  CHECK(ring_from_json(jp, 2) == p);
  CHECK(nlohmann::json::parse(jp.dump()).dump() == jp.dump());

  Partition lam{4, 2, 1};
  CHECK(partition_from_json(to_json(lam)) == lam);

  SchurExpansion x(2, 4);
  x.add(Partition{2, 1}, Int(-12));
  x.add(Partition{1}, Int(3));
  nlohmann::json jx = to_json(x);
  SchurExpansion back = schur_from_json(jx);
  CHECK(back == x);
  CHECK(back.box());
  CHECK(to_json(back).dump() == jx.dump());

  LaurentWindow s = action_determinantal(Partition{2, 1}, H, 3);
  nlohmann::json js = to_json(s);
  LaurentWindow sback = series_from_json(js, 2);
  CHECK(sback == s);
  CHECK(to_json(sback).dump() == js.dump());

  GlMatrix A(4);
  A.add(1, 2, Int(5));
  A.add(0, 3, Int(-100000));
  nlohmann::json ja = to_json(A);
  GlMatrix Aback = matrix_from_json(ja);
  CHECK(Aback.n == A.n);
  CHECK(Aback.entries == A.entries);
  CHECK(to_json(Aback).dump() == ja.dump());

  GlMatrix open(std::nullopt);
  open.add(7, 0, Int(2));
  nlohmann::json jo = to_json(open);
  CHECK(jo["n"].is_null());
  CHECK(!matrix_from_json(jo).n);
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(partition_from_json(nlohmann::json::parse("[1,2]")),
                  ParseError);
  CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse("{}"), 2), ParseError);
  CHECK_THROWS_AS(
      ring_from_json(nlohmann::json::parse(R"([{"coeff":"x","exps":[0,0]}])"),
                     2),
      ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(
                      R"({"n":2,"entries":[{"i":5,"j":0,"a":"1"}]})")),
                  ParseError);
}
