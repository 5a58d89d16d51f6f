#include "fairrep/rational.hpp"

#include <cctype>

#include "fairrep/error.hpp"

namespace fairrep {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InputError("bad rational '" + std::string(whole) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad rational '" + std::string(whole) + "'");
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  Rational value;
  if (slash == std::string_view::npos) {
    value = Rational(parse_integer(body, text));
  } else {
    auto den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_integer(body.substr(0, slash), text), den);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace fairrep
