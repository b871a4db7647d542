#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polypart {

// Exact coordinate field. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

using Point = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return abs(q); }

// Parses "num", "num/den", or "-num/den".
Rational parse_rational(const std::string& s);

// "num" when den==1, else "num/den".
std::string rational_to_string(const Rational& q);

double rational_to_double(const Rational& q);

// Nearest rational with the given power-of-two denominator.
Rational round_to_grid(double x, std::uint64_t log2_den = 32);

// Smallest multiple of 2^-log2_den that is >= x.
Rational ceil_to_grid(double x, std::uint64_t log2_den = 32);

Integer binomial(unsigned long n, unsigned long k);

// ceil(a/b) for rationals, as an Integer.
Integer rational_ceil(const Rational& q);
Integer rational_floor(const Rational& q);

std::string point_to_string(const Point& p);

}  // namespace polypart
