#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace equilib {

// Exact rational utility value. Every equilibrium check below compares
// payoffs with non-strict >= against strict <, so ties must be exact;
// no floating point is used anywhere in the library.
using Payoff = boost::multiprecision::cpp_rational;

// Parses an optional sign followed by an integer ("12"), a decimal
// ("2.5", ".5" -- converted exactly), or a quotient ("-65/4").
inline Payoff parse_payoff(std::string_view text) {
  using boost::multiprecision::cpp_int;
  const auto fail = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  std::string digits;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits += text[pos++];

  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') den += text[pos++];
    if (digits.empty() || den.empty() || pos != text.size()) fail();
    cpp_int d(den);
    if (d == 0) fail();
    Payoff value(cpp_int(digits), d);
    return negative ? Payoff(-value) : value;
  }

  std::string frac;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') frac += text[pos++];
  }
  if (pos != text.size() || (digits.empty() && frac.empty())) fail();

  cpp_int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  cpp_int numerator = cpp_int(digits.empty() ? "0" : digits) * scale +
                      cpp_int(frac.empty() ? "0" : frac);
  Payoff value(numerator, scale);
  return negative ? Payoff(-value) : value;
}

// Integers print bare, everything else as "a/b".
inline std::string payoff_to_string(const Payoff& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace equilib
