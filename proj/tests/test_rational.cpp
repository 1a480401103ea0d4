#include <catch2/catch_amalgamated.hpp>

#include "equilib/rational.hpp"

using equilib::Payoff;
using equilib::parse_payoff;
using equilib::payoff_to_string;

TEST_CASE("integer literals") {
  CHECK(parse_payoff("12") == 12);
  CHECK(parse_payoff("-3") == -3);
  CHECK(parse_payoff("+7") == 7);
  CHECK(parse_payoff("0") == 0);
  CHECK(parse_payoff("-0") == 0);
}

TEST_CASE("decimal literals convert exactly") {
  CHECK(parse_payoff("2.5") == Payoff(5, 2));
  CHECK(parse_payoff("-16.25") == Payoff(-65, 4));
  CHECK(parse_payoff(".5") == Payoff(1, 2));
  CHECK(parse_payoff("0.1") == Payoff(1, 10));
  CHECK(parse_payoff("2.") == 2);
  // exact, unlike any binary float reading of 0.1
  CHECK(parse_payoff("0.1") * 10 == 1);
}

TEST_CASE("quotient literals") {
  CHECK(parse_payoff("5/2") == Payoff(5, 2));
  CHECK(parse_payoff("-65/4") == Payoff(-65, 4));
  CHECK(parse_payoff("4/8") == Payoff(1, 2));  // normalized
}

TEST_CASE("rejects junk") {
  CHECK_THROWS_AS(parse_payoff(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_payoff("2 "), std::invalid_argument);
}

TEST_CASE("formatting") {
  CHECK(payoff_to_string(Payoff(5)) == "5");
  CHECK(payoff_to_string(Payoff(-65, 4)) == "-65/4");
  CHECK(payoff_to_string(Payoff(4, 8)) == "1/2");
  CHECK(payoff_to_string(Payoff(0)) == "0");
}

TEST_CASE("parse/format round trip") {
  for (const char* text : {"0", "7", "-19", "5/2", "-65/4", "1/3"}) {
    const Payoff value = parse_payoff(text);
    CHECK(parse_payoff(payoff_to_string(value)) == value);
  }
}
