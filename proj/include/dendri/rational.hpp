#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "dendri/error.hpp"

namespace dendri {

using Rational = mpq_class;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses "p", "-p", "+p" or "p/q" (q != 0) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw Error("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in rational '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace dendri
