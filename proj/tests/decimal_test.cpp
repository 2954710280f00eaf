#include <doctest.h>

#include "wvg/decimal.hpp"

using namespace wvg;

TEST_CASE("format_decimal renders fixed point with half-even ties") {
  CHECK(format_decimal(BigRat(1, 3), 4) == "0.3333");
  CHECK(format_decimal(BigRat(2, 3), 4) == "0.6667");
  CHECK(format_decimal(BigRat(1, 2), 0) == "0");   // tie to even
  CHECK(format_decimal(BigRat(3, 2), 0) == "2");   // tie to even
  CHECK(format_decimal(BigRat(5, 1000), 2) == "0.00");
  CHECK(format_decimal(BigRat(15, 1000), 2) == "0.02");
  CHECK(format_decimal(BigRat(25, 1000), 2) == "0.02");
  CHECK(format_decimal(BigRat(7, 1), 3) == "7.000");
  CHECK(format_decimal(BigRat(-1, 3), 3) == "-0.333");
  CHECK(format_decimal(BigRat(0, 1), 3) == "0.000");
}

TEST_CASE("format_percent scales by one hundred") {
  CHECK(format_percent(BigRat(1, 2), 3) == "50.000%");
  CHECK(format_percent(BigRat(830988, 3572928), 3) == "23.258%");
  CHECK(format_percent(BigRat(756, 2520571), 3) == "0.030%");
  CHECK(format_percent(BigRat(1, 1), 3) == "100.000%");
}

TEST_CASE("parse_decimal handles integers and fractions") {
  CHECK(parse_decimal("85") == BigRat(85));
  CHECK(parse_decimal("0.85") == BigRat(17, 20));
  CHECK(parse_decimal(".5") == BigRat(1, 2));
  CHECK(parse_decimal("12.5") == BigRat(25, 2));
  CHECK_THROWS(parse_decimal(""));
  CHECK_THROWS(parse_decimal("1.2.3"));
  CHECK_THROWS(parse_decimal("-1"));
  CHECK_THROWS(parse_decimal("1e5"));
}

TEST_CASE("parse_percent yields a fraction of one") {
  CHECK(parse_percent("85%") == BigRat(17, 20));
  CHECK(parse_percent("0.1%") == BigRat(1, 1000));
  CHECK(parse_percent("100%") == BigRat(1));
  CHECK_THROWS(parse_percent("85"));
  CHECK_THROWS(parse_percent("%"));
}
