#pragma once

#include <map>
#include <string>
#include <vector>

#include "polypart/rational.hpp"

namespace polypart {

using Exponents = std::vector<int>;

// Global monomial order: ascending total degree, ties broken by descending
// exponent of the first variable, then the second, etc. Veronese coordinates
// and determinant signs depend on this order staying fixed.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// All monomials of total degree in [1, max_degree] in num_vars variables,
// listed in the global order. Excludes the constant monomial.
std::vector<Exponents> nonconstant_monomials(int num_vars, int max_degree);

// binom(max_degree + num_vars, num_vars) - 1, the count of nonconstant
// monomials of total degree <= max_degree.
long monomial_count(int num_vars, int max_degree);

// Dense-map multivariate polynomial with exact rational coefficients.
// Immutable in spirit: arithmetic returns new values.
class MultiPoly {
 public:
  explicit MultiPoly(int num_vars);

  static MultiPoly zero(int num_vars) { return MultiPoly(num_vars); }
  static MultiPoly constant(int num_vars, const Rational& c);
  // Single monomial c * x^e.
  static MultiPoly monomial(int num_vars, const Exponents& e, const Rational& c);

  int num_vars() const { return num_vars_; }
  // Max total degree of a nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<Exponents, Rational, MonomialOrder>& coeffs() const {
    return coeffs_;
  }
  Rational coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Rational& c);

  Rational eval(const Point& x) const;
  int sign_at(const Point& x) const { return sign_of(eval(x)); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  bool operator==(const MultiPoly& o) const;

  // Fixture format: one monomial per line, "e1 e2 ... ed : num/den".
  // Input is order-insensitive; output is in the canonical order.
  static MultiPoly from_text(const std::string& text, int num_vars);
  std::string to_text() const;

 private:
  int num_vars_;
  std::map<Exponents, Rational, MonomialOrder> coeffs_;
};

}  // namespace polypart
