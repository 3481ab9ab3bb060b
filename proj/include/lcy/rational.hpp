#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcy {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p/q" or "p". Decimal points and exponents are rejected so that no
// input is ever silently rounded.
Rational parse_rational(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
int64_t to_int64(const BigInt& v);

}  // namespace lcy
