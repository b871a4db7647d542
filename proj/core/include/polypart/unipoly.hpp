#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polypart/multipoly.hpp"
#include "polypart/rational.hpp"

namespace polypart {

// Raised when an operation that needs a nonzero polynomial sees the zero
// polynomial; for line/segment restrictions this is the "contained in the
// zero set" case, which callers must handle.
struct ZeroPolynomialError : std::runtime_error {
  ZeroPolynomialError() : std::runtime_error("polynomial is identically zero") {}
};

// Dense univariate polynomial, trailing zeros trimmed; zero poly is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly zero() { return UniPoly(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i]
                                                          : Rational(0);
  }

  Rational eval(const Rational& t) const;
  int sign_at(const Rational& t) const { return sign_of(eval(t)); }
  UniPoly derivative() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  // Exact division of (*this) by (t - root); requires root to be a root.
  UniPoly deflate(const Rational& root) const;

 private:
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies t^i
};

// g(t) = f(p + t (q - p)); deg(g) <= deg(f). Throws if p == q.
UniPoly restrict_to_segment(const MultiPoly& f, const Point& p, const Point& q);

// Sturm chain with primitive integer polynomials (signs preserved).
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& g);  // throws ZeroPolynomialError
  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  // Distinct real roots in (a, b], endpoints assumed non-roots of g
  // (a root endpoint is fine for a, that is the standard half-open count).
  int count_half_open(const Rational& a, const Rational& b) const;
  int count_all_roots() const;

 private:
  std::vector<std::vector<Integer>> chain_;  // integer coeff vectors
};

// Exact number of distinct real roots of g in (a,b) or [a,b].
// Throws ZeroPolynomialError if g == 0, std::invalid_argument if a >= b.
int count_roots_in_interval(const UniPoly& g, const Rational& a,
                            const Rational& b, bool open);

// Number of distinct real roots of g over all of R.
int count_real_roots(const UniPoly& g);

// Disjoint open intervals with rational non-root endpoints, each containing
// exactly one distinct real root of g, sorted left to right. Adjacent
// intervals may share an endpoint. A rational root detected during bisection
// comes back as the degenerate interval [r, r].
std::vector<std::pair<Rational, Rational>> isolate_roots(const UniPoly& g);

// Upper bound B such that all real roots lie in (-B, B).
Rational root_bound(const UniPoly& g);

struct Line {
  Rational a, b, c;  // a*x + b*y + c = 0, normalized

  Line(const Rational& a_, const Rational& b_, const Rational& c_);
  static Line through(const Point& p, const Point& q);

  // Two distinct rational points spanning the line, one parameter unit apart.
  std::pair<Point, Point> span() const;
  Rational value_at(const Point& p) const { return a * p[0] + b * p[1] + c; }
  bool operator==(const Line& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const Line& o) const;
};

struct LineZeroResult {
  bool contained = false;  // line lies inside Z(f)
  int count = 0;           // number of intersection points otherwise
};

// Either the line lies in Z(f), or the exact intersection count (<= deg f).
// Throws ZeroPolynomialError if f is the zero polynomial.
LineZeroResult line_zero_intersections(const MultiPoly& f, const Line& line);

}  // namespace polypart
