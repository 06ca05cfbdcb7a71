#include "listcrit/rational.hpp"

#include <doctest.h>

using namespace listcrit;

TEST_CASE("fraction strings") {
  CHECK(to_fraction_string(Rational(93, 766)) == "93/766");
  CHECK(to_fraction_string(Rational(-18, 13)) == "-18/13");
  CHECK(to_fraction_string(Rational(4, 2)) == "2");
  CHECK(to_fraction_string(Rational(0)) == "0");
}

TEST_CASE("parsing") {
  CHECK(parse_rational("52/21") == Rational(52, 21));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("a/b"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("1.5"));
}

TEST_CASE("truncation is never rounding") {
  // 19 + 10693/140146 = 19.076298...: rounds to .0763 but must truncate to .0762
  Rational x = Rational(19) + Rational(10693, 140146);
  CHECK(to_decimal_truncated(x, 4) == "19.0762");
  CHECK(truncated_scaled(x, 4) == BigInt(190762));
  CHECK(to_decimal_truncated(Rational(2, 23), 4) == "0.0869");
  CHECK(to_decimal_truncated(Rational(1, 2), 0) == "0");
  CHECK(to_decimal_truncated(Rational(-7, 2), 2) == "-3.50");
  CHECK(to_decimal_truncated(Rational(5), 4) == "5.0000");
}
