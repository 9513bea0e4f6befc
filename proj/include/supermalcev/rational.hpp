#ifndef SUPERMALCEV_RATIONAL_HPP
#define SUPERMALCEV_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace supermalcev {

/// Exact arbitrary-precision rational; always kept canonical.
using Rational = mpq_class;

/// Raised for malformed user input (files, flags, dimension mismatches).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a sign-bearing evaluation receives an element spanning both parities.
class NotHomogeneous : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// GMP arithmetic assumes reduced operands.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" with an optional leading '-' (ASCII or U+2212).
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  } else if (s.starts_with("\xE2\x88\x92")) {
    negative = true;
    s.remove_prefix(3);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

/// Canonical text form: "p" for integers, "p/q" otherwise, ASCII '-'.
inline std::string format_rational(const Rational& q) { return q.get_str(10); }

}  // namespace supermalcev

#endif  // SUPERMALCEV_RATIONAL_HPP
