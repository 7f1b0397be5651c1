#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace closc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "p" or "p/q" with optional leading sign on either part.
// The result is canonicalized (lowest terms, positive denominator).
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> BigInt {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
    if (i == part.size())
      throw std::invalid_argument("invalid rational literal: '" +
                                  std::string(text) + "'");
    for (std::size_t j = i; j < part.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(part[j])))
        throw std::invalid_argument("invalid rational literal: '" +
                                    std::string(text) + "'");
    }
    return BigInt(std::string(part));
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" +
                                std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Canonical textual form: integers print bare, everything else as "p/q"
// with q > 0 and gcd(p, q) = 1.
inline std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string out = num.str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

}  // namespace closc
