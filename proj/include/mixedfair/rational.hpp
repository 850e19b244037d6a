#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mixedfair {

// Every quantity in the library (values, fractions, welfare products,
// potentials) is an exact rational. No floating point appears anywhere in
// allocation or predicate logic; fairness conditions hinge on exact zero
// and equality tests.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p", "-p" or "p/q" with q > 0. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: lowest terms, positive denominator, "p" or "p/q".
std::string rational_to_string(const Rational& value);

// Decimal rendering for human-readable output only; never used on the wire.
std::string rational_to_decimal(const Rational& value, int digits = 6);

} // namespace mixedfair
