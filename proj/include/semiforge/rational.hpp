#ifndef SEMIFORGE_RATIONAL_HPP_
#define SEMIFORGE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace semiforge {

  // Arbitrary precision rational, always kept in canonical form
  // (gcd(num, den) = 1, den > 0).
  using Rational = mpq_class;
  using Integer  = mpz_class;

  // p/q in canonical form. Throws ParseError when q == 0.
  Rational make_rational(Integer const& p, Integer const& q);

  // Parses "p", "-p" or "p/q" (q != 0); the result is normalised, so "2/4"
  // yields 1/2. Throws ParseError on malformed input or zero denominator.
  Rational parse_rational(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string to_string(Rational const& x);

  inline std::string to_string(Integer const& x) {
    return x.get_str();
  }

}  // namespace semiforge

#endif  // SEMIFORGE_RATIONAL_HPP_
