#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ntpack {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Lowest terms with positive denominator.
inline bool is_canonical(const Rational& q) {
  if (q.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

}  // namespace ntpack
