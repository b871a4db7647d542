#include <doctest.h>

#include <algorithm>
#include <set>

#include "polypart/linalg.hpp"
#include "polypart/multipoly.hpp"
#include "polypart/rng.hpp"
#include "polypart/unipoly.hpp"

using namespace polypart;

namespace {

Rational ratq(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

MultiPoly unit_circle() {
  MultiPoly f(2);
  f.set_coeff({2, 0}, 1);
  f.set_coeff({0, 2}, 1);
  f.set_coeff({0, 0}, -1);
  return f;
}

MultiPoly random_poly(int num_vars, int max_degree, SplitRng& rng) {
  MultiPoly f(num_vars);
  for (const auto& e : nonconstant_monomials(num_vars, max_degree))
    if (rng.below(3) == 0) f.set_coeff(e, rng.next_signed(20));
  f.set_coeff(Exponents(num_vars, 0), rng.next_signed(20));
  return f;
}

Point random_point(int dim, SplitRng& rng) {
  Point p;
  for (int i = 0; i < dim; ++i)
    p.push_back(ratq(rng.next_signed(100), 1 + rng.below(9)));
  return p;
}

// Bisection root counter for polynomials whose real roots are all simple.
// Grid spacing below the minimum root gap guarantees every root produces a
// sign change or an exact grid hit.
int bisection_root_count(const UniPoly& g, const Rational& lo,
                         const Rational& hi, const Rational& step) {
  int count = 0;
  Rational prev = lo;
  int prev_sign = g.sign_at(prev);
  for (Rational x = lo + step; x <= hi + step; x += step) {
    int s = g.sign_at(x);
    if (s == 0) {
      ++count;
      // skip past the exact hit so it is not double counted
      prev_sign = 0;
      prev = x;
      continue;
    }
    if (prev_sign != 0 && s != prev_sign) ++count;
    if (prev_sign == 0 && count == 0) ++count;  // zero at the left endpoint
    prev_sign = s;
    prev = x;
  }
  return count;
}

}  // namespace

TEST_CASE("multipoly eval basics") {
  MultiPoly f = unit_circle();
  CHECK(f.eval({rat(0), rat(0)}) == Rational(-1));

  MultiPoly xy = MultiPoly::monomial(2, {1, 1}, 1);
  CHECK(xy.eval({rat(2), rat(3)}) == Rational(6));

  MultiPoly z = MultiPoly::zero(2);
  CHECK(z.eval({rat(7), rat(-4)}) == Rational(0));

  CHECK_THROWS_AS(f.eval({rat(1)}), std::invalid_argument);
}

TEST_CASE("monomial counts and order") {
  CHECK(monomial_count(2, 2) == 5);
  CHECK(monomial_count(2, 1) == 2);
  CHECK(monomial_count(3, 2) == 9);

  auto ms = nonconstant_monomials(2, 2);
  std::vector<Exponents> want = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(ms == want);
}

TEST_CASE("restrict_to_segment examples") {
  MultiPoly f = unit_circle();
  UniPoly g = restrict_to_segment(f, {rat(0), rat(0)}, {rat(2), rat(0)});
  CHECK(g == UniPoly({-1, 0, 4}));

  MultiPoly x = MultiPoly::monomial(2, {1, 0}, 1);
  CHECK(restrict_to_segment(x, {rat(-1), rat(0)}, {rat(1), rat(0)}) ==
        UniPoly({-1, 2}));

  MultiPoly y = MultiPoly::monomial(2, {0, 1}, 1);
  CHECK(restrict_to_segment(y, {rat(0), rat(5)}, {rat(1), rat(5)}) ==
        UniPoly({5}));

  CHECK_THROWS_AS(restrict_to_segment(f, {rat(1), rat(1)}, {rat(1), rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("count_roots_in_interval examples") {
  CHECK(count_roots_in_interval(UniPoly({-1, 0, 1}), -2, 2, true) == 2);
  CHECK(count_roots_in_interval(UniPoly({1, 0, 1}), -10, 10, true) == 0);
  CHECK(count_roots_in_interval(UniPoly({0, 0, 1}), -1, 1, true) == 1);
  CHECK_THROWS_AS(count_roots_in_interval(UniPoly::zero(), 0, 1, true),
                  ZeroPolynomialError);
  CHECK_THROWS_AS(count_roots_in_interval(UniPoly({1, 1}), 1, 0, true),
                  std::invalid_argument);

  // closed interval picks up endpoint roots
  CHECK(count_roots_in_interval(UniPoly({-1, 0, 1}), -1, 1, false) == 2);
  CHECK(count_roots_in_interval(UniPoly({-1, 0, 1}), -1, 1, true) == 0);
}

TEST_CASE("line_zero_intersections examples") {
  MultiPoly f = unit_circle();
  auto res = line_zero_intersections(f, Line(0, 1, 0));  // y = 0
  CHECK(!res.contained);
  CHECK(res.count == 2);

  MultiPoly xy = MultiPoly::monomial(2, {1, 1}, 1);
  CHECK(line_zero_intersections(xy, Line(1, 0, 0)).contained);  // x = 0

  auto one = line_zero_intersections(xy, Line(0, 1, -1));  // y = 1
  CHECK(!one.contained);
  CHECK(one.count == 1);
  CHECK(one.count <= xy.degree());

  CHECK_THROWS_AS(line_zero_intersections(MultiPoly::zero(2), Line(1, 0, 0)),
                  ZeroPolynomialError);
}

TEST_CASE("random lines never exceed the degree cap") {
  SplitRng root(20240817);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    SplitRng rng = root.split(i);
    MultiPoly f = random_poly(2, 1 + static_cast<int>(rng.below(8)), rng);
    if (f.is_zero() || f.degree() < 1) continue;
    long a = rng.next_signed(50), b = rng.next_signed(50);
    long c = rng.next_signed(50);
    if (a == 0 && b == 0) a = 1;
    auto res = line_zero_intersections(f, Line(rat(a), rat(b), rat(c)));
    if (!res.contained) REQUIRE(res.count <= f.degree());
    ++checked;
  }
  CHECK(checked >= 9000);
}

TEST_CASE("restriction commutes with evaluation") {
  SplitRng root(7);
  for (int i = 0; i < 100; ++i) {
    SplitRng rng = root.split(i);
    MultiPoly f = random_poly(2, 1 + static_cast<int>(rng.below(5)), rng);
    Point p = random_point(2, rng);
    Point q = random_point(2, rng);
    if (p == q) q[0] += 1;
    Rational t = rng.next_unit_rational() * rat(4) - rat(2);
    UniPoly g = restrict_to_segment(f, p, q);
    Point at = {p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
    REQUIRE(g.eval(t) == f.eval(at));
  }
}

TEST_CASE("sturm count agrees with a bisection isolator") {
  // Products of distinct rational linear factors and sign-definite
  // quadratics: all real roots are simple and known, so a grid finer than
  // the minimum root gap catches every one by a sign change.
  SplitRng root(99);
  for (int i = 0; i < 60; ++i) {
    SplitRng rng = root.split(i);
    std::set<Rational> roots;
    UniPoly g({1});
    int linear = 1 + static_cast<int>(rng.below(5));
    for (int j = 0; j < linear; ++j) {
      Rational r = ratq(rng.next_signed(40), 1 + rng.below(4));
      if (!roots.insert(r).second) continue;
      g = g * UniPoly({-r, 1});
    }
    int quads = static_cast<int>(rng.below(3));
    for (int j = 0; j < quads; ++j) {
      Rational u = rng.next_signed(6);
      g = g * UniPoly({u * u + 1, rat(2) * u, 1});  // (t+u)^2 + 1
    }
    Rational gap(1, 1);
    Rational prev;
    bool first = true;
    for (const auto& r : roots) {
      if (!first) {
        Rational diff = r - prev;
        gap = std::min(gap, diff);
      }
      prev = r;
      first = false;
    }
    int expected = static_cast<int>(roots.size());
    CHECK(count_real_roots(g) == expected);
    // every constructed root lies in [-40, 40]
    CHECK(bisection_root_count(g, rat(-41), rat(41), gap / 3) == expected);
  }
}

TEST_CASE("isolate_roots brackets each distinct root once") {
  UniPoly g = UniPoly({-2, 0, 1}) * UniPoly({-1, 1}) * UniPoly({-1, 1});
  auto ivs = isolate_roots(g);  // roots -sqrt2, 1 (double), sqrt2
  REQUIRE(ivs.size() == 3);
  for (const auto& [lo, hi] : ivs) {
    if (lo == hi) {
      CHECK(g.sign_at(lo) == 0);
    } else {
      CHECK(g.sign_at(lo) != 0);
      CHECK(g.sign_at(hi) != 0);
      CHECK(count_roots_in_interval(g, lo, hi, true) == 1);
    }
  }
  // sorted, and open interiors never overlap
  for (size_t i = 1; i < ivs.size(); ++i)
    CHECK(ivs[i - 1].second <= ivs[i].first);
  // middle bracket really is the double root at 1
  CHECK(ivs[1].first <= Rational(1));
  CHECK(ivs[1].second >= Rational(1));
}

TEST_CASE("exact arithmetic properties") {
  SplitRng root(11);
  for (int i = 0; i < 50; ++i) {
    SplitRng rng = root.split(i);
    MultiPoly f = random_poly(2, 3, rng);
    MultiPoly g = random_poly(2, 3, rng);
    CHECK((f + g) - g == f);
    Point p = random_point(2, rng);
    CHECK((f * g).eval(p) == f.eval(p) * g.eval(p));
  }
}

TEST_CASE("fixture text round trip") {
  MultiPoly f = unit_circle();
  MultiPoly g = MultiPoly::from_text(f.to_text(), 2);
  CHECK(f == g);
  // order-insensitive input
  MultiPoly h = MultiPoly::from_text("0 2 : 1\n0 0 : -1\n2 0 : 1\n", 2);
  CHECK(h == f);
}

TEST_CASE("line normalization and span") {
  Line l(rat(-2), rat(4), rat(-6));
  CHECK(l.a == Rational(1));
  CHECK(l.b == Rational(-2));
  CHECK(l.c == Rational(3));

  Line m = Line::through({rat(0), rat(0)}, {rat(1), rat(1)});
  CHECK(m.value_at({rat(5), rat(5)}) == Rational(0));
  auto [p, q] = m.span();
  CHECK(m.value_at(p) == Rational(0));
  CHECK(m.value_at(q) == Rational(0));
  CHECK(p != q);
}

TEST_CASE("determinant and kernel") {
  Matrix a = {{rat(1), rat(2)}, {rat(3), rat(4)}};
  CHECK(determinant(a) == Rational(-2));

  Matrix sw = {{rat(3), rat(4)}, {rat(1), rat(2)}};
  CHECK(determinant(sw) == Rational(2));

  Matrix sing = {{rat(1), rat(2), rat(3)}, {rat(2), rat(4), rat(6)}};
  auto k = kernel_vector(sing, 3);
  REQUIRE(k.has_value());
  Rational dot;
  for (int j = 0; j < 3; ++j) dot += sing[0][j] * (*k)[j];
  CHECK(dot == Rational(0));
}
