#include <doctest.h>

#include "suq2/catalog.hpp"
#include "suq2/expr.hpp"

using namespace suq2;

TEST_CASE("parsing and rendering round trip") {
  auto a = suq2_presentation();
  Element x = parse_element("a'*a", a);
  CHECK(x.to_string() == "1 - g*g'");
  CHECK(parse_element(x.to_string(), a) == x);
  CHECK(parse_element("a g", a) == parse_element("a*g", a));
  CHECK(parse_element("g'^2", a) == parse_element("g'*g'", a));
  CHECK(parse_element("(a*g)'", a) == parse_element("g'*a'", a));
  CHECK(parse_element("a*g - qb*g*a", a).is_zero());
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("q^-1*qb") == Scalar::zeta().inverse());
  CHECK(parse_scalar("0.25") == Scalar::rational(1, 4));
  CHECK(parse_scalar("010") == Scalar(10));
  CHECK(parse_scalar("(1 + i)/2") == (Scalar(1) + Scalar::i()) / Scalar(2));
  CHECK(parse_scalar("zeta") == Scalar::zeta());
}

TEST_CASE("parse errors carry a column") {
  auto a = suq2_presentation();
  try {
    parse_element("a*(", a);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  try {
    parse_element("a + x", a);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_element("g/a", a), ParseError);
  CHECK_THROWS_AS(parse_element("g^-1", a), ParseError);
  CHECK_THROWS_AS(parse_element("j1(g)", a), ParseError);
  CHECK_THROWS_AS(parse_element("j3(g)", suq2_tensor2()), ParseError);
}

TEST_CASE("selectors") {
  for (const auto& s : algebra_selectors()) CHECK(algebra_by_selector(s) != nullptr);
  CHECK(algebra_by_selector("suq2-tensor2") == suq2_tensor2());
}
