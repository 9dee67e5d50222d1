#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace raynaud {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

/// Canonical "num/den" form: den > 0, gcd-reduced, den always printed.
inline std::string to_fraction_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "a" or "a/b" with b != 0; anything else throws invalid_argument.
inline Rational parse_fraction(const std::string& s) {
  auto whole = [&](std::string_view part, Integer& v) {
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    return ec == std::errc{} && end == part.data() + part.size() && !part.empty();
  };
  const std::string_view sv(s);
  const auto slash = sv.find('/');
  Integer num = 0, den = 1;
  const bool ok = slash == std::string_view::npos
                      ? whole(sv, num)
                      : whole(sv.substr(0, slash), num) && whole(sv.substr(slash + 1), den);
  if (!ok || den == 0) throw std::invalid_argument("malformed fraction: '" + s + "'");
  return Rational(num, den);
}

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

/// Classes built from valid parameters only ever carry denominators dividing ell.
inline void require_denominator_divides(const Rational& r, Integer ell) {
  if (ell % r.denominator() != 0)
    throw std::logic_error("denominator " + std::to_string(r.denominator()) +
                           " does not divide ell=" + std::to_string(ell));
}

}  // namespace raynaud
