#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairrep {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; integers render as "p/1".
std::string to_string(const Rational& r);
// Accepts "p/q" or "p" with optional sign. Throws InputError.
Rational parse_rational(std::string_view text);

}  // namespace fairrep
