#include "polypart/rational.hpp"

#include <cmath>
#include <sstream>

namespace polypart {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

double rational_to_double(const Rational& q) { return q.get_d(); }

Rational round_to_grid(double x, std::uint64_t log2_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  double scaled = std::ldexp(x, static_cast<int>(log2_den));
  Integer num;
  mpz_set_d(num.get_mpz_t(), std::nearbyint(scaled));
  Integer den = 1;
  den <<= log2_den;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational ceil_to_grid(double x, std::uint64_t log2_den) {
  double scaled = std::ldexp(x, static_cast<int>(log2_den));
  Integer num;
  mpz_set_d(num.get_mpz_t(), std::ceil(scaled));
  Integer den = 1;
  den <<= log2_den;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer rational_ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer rational_floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace polypart
