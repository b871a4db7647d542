#include <doctest.h>

#include <algorithm>

#include "polypart/hamsandwich.hpp"
#include "polypart/rng.hpp"

using namespace polypart;

namespace {

Rational ratq(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

PointSet random_set(int count, SplitRng& rng, long span = 40) {
  PointSet s;
  while (static_cast<int>(s.size()) < count) {
    Point p = {ratq(rng.next_signed(span), 2),
               ratq(rng.next_signed(span), 2)};
    if (std::find(s.begin(), s.end(), p) == s.end()) s.push_back(p);
  }
  return s;
}

MultiPoly line_poly(const Rational& a, const Rational& b, const Rational& c) {
  MultiPoly f(2);
  f.set_coeff({1, 0}, a);
  f.set_coeff({0, 1}, b);
  f.set_coeff({0, 0}, c);
  return f;
}

}  // namespace

TEST_CASE("veronese lift examples") {
  auto v = veronese_lift({rat(2), rat(3)}, 2);
  std::vector<Rational> want = {rat(2), rat(3), rat(4), rat(6), rat(9)};
  CHECK(v == want);

  auto z = veronese_lift({rat(0), rat(0)}, 3);
  CHECK(z == std::vector<Rational>(monomial_count(2, 3), Rational(0)));

  auto id = veronese_lift({rat(5, 3), rat(-7)}, 1);
  CHECK(id == std::vector<Rational>{rat(5, 3), rat(-7)});
}

TEST_CASE("lift turns polynomial signs into linear signs") {
  SplitRng root(31);
  for (int i = 0; i < 200; ++i) {
    SplitRng rng = root.split(i);
    int deg = 1 + static_cast<int>(rng.below(4));
    MultiPoly f(2);
    auto ms = nonconstant_monomials(2, deg);
    std::vector<Rational> coeffs;
    for (const auto& e : ms) {
      Rational c = rng.next_signed(9);
      coeffs.push_back(c);
      if (c != 0) f.set_coeff(e, c);
    }
    Rational c0 = rng.next_signed(9);
    f.set_coeff({0, 0}, c0);
    Point p = {ratq(rng.next_signed(50), 3),
               ratq(rng.next_signed(50), 3)};
    auto lift = veronese_lift(p, deg);
    Rational dot = c0;
    for (size_t j = 0; j < lift.size(); ++j) dot += coeffs[j] * lift[j];
    REQUIRE(sign_of(dot) == f.sign_at(p));
  }
}

TEST_CASE("verify_bisection examples") {
  MultiPoly xm1 = line_poly(1, 0, -1);
  PointSet row = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)}};
  auto cert = verify_bisection(xm1, {row}, 0);
  CHECK(cert.sets[0].pos == 1);
  CHECK(cert.sets[0].neg == 1);
  CHECK(cert.sets[0].zero == 1);
  CHECK(cert.all_pass);

  MultiPoly x = line_poly(1, 0, 0);
  PointSet two = {{rat(1), rat(0)}, {rat(2), rat(0)}};
  auto fail = verify_bisection(x, {two}, 0);
  CHECK(fail.sets[0].pos == 2);
  CHECK(!fail.all_pass);

  MultiPoly circ(2);
  circ.set_coeff({2, 0}, 1);
  circ.set_coeff({0, 2}, 1);
  circ.set_coeff({0, 0}, -1);
  PointSet four = {{rat(0), rat(0)},
                   {rat(2), rat(0)},
                   {rat(0), rat(2)},
                   {rat(3), rat(3)}};
  auto c4 = verify_bisection(circ, {four}, 0);
  CHECK(c4.sets[0].pos == 3);
  CHECK(c4.sets[0].neg == 1);
  CHECK(c4.sets[0].zero == 0);
  CHECK(!c4.all_pass);
}

TEST_CASE("bisection cap") {
  CHECK(bisection_cap(10, 0) == 5);
  CHECK(bisection_cap(11, 0) == 5);
  CHECK(bisection_cap(10, rat(1, 20)) == 6);
  CHECK(bisection_cap(40, rat(1, 20)) == 22);
}

TEST_CASE("find_bisecting_polynomial on stated instances") {
  BisectionOptions opts;
  opts.eps = 0;
  opts.seed = 3;

  PointSet row = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)}};
  auto res = find_bisecting_polynomial({row}, 1, opts);
  CHECK(res.cert.all_pass);
  CHECK(!res.f.is_zero());
  CHECK(res.f.degree() <= 1);

  std::vector<PointSet> pair = {{{rat(0), rat(0)}, {rat(2), rat(0)}},
                                {{rat(0), rat(2)}, {rat(2), rat(2)}}};
  auto res2 = find_bisecting_polynomial(pair, 1, opts);
  CHECK(res2.cert.all_pass);

  // five 10-point sets, degree 2: monomial_count(2,2)=5 >= 5
  SplitRng rng(55);
  std::vector<PointSet> five;
  for (int i = 0; i < 5; ++i) {
    SplitRng r = rng.split(i);
    five.push_back(random_set(10, r));
  }
  auto res5 = find_bisecting_polynomial(five, 2, opts);
  CHECK(res5.cert.all_pass);
  auto recheck = verify_bisection(res5.f, five, 0);
  CHECK(recheck.all_pass);
}

TEST_CASE("find_bisecting_polynomial validates preconditions") {
  std::vector<PointSet> sets(3);
  for (int i = 0; i < 3; ++i)
    sets[i] = {{rat(i), rat(0)}, {rat(i), rat(1)}};
  // monomial_count(2,1)=2 < 3 sets
  CHECK_THROWS_AS(find_bisecting_polynomial(sets, 1), std::invalid_argument);

  std::vector<PointSet> empt = {{}};
  CHECK_THROWS_AS(find_bisecting_polynomial(empt, 1), std::invalid_argument);
}

TEST_CASE("exact oracle basics") {
  PointSet row = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)}};
  auto f = exact_bisector_oracle({row}, 1);
  REQUIRE(f.has_value());
  CHECK(verify_bisection(*f, {row}, 0).all_pass);

  PointSet diag = {{rat(0), rat(0)}, {rat(1), rat(1)}};
  auto g = exact_bisector_oracle({diag}, 1);
  REQUIRE(g.has_value());
  CHECK(verify_bisection(*g, {diag}, 0).all_pass);

  SplitRng rng(2);
  CHECK_THROWS_AS(exact_bisector_oracle({random_set(15, rng)}, 1),
                  std::invalid_argument);
}

TEST_CASE("search succeeds wherever the oracle succeeds") {
  SplitRng root(404);
  int agreements = 0;
  for (int i = 0; i < 40; ++i) {
    SplitRng rng = root.split(i);
    std::vector<PointSet> sets;
    int nsets = 1 + static_cast<int>(rng.below(2));
    int per = 2 + static_cast<int>(rng.below(3));
    for (int s = 0; s < nsets; ++s) {
      SplitRng r = rng.split(100 + s);
      sets.push_back(random_set(per, r, 12));
    }
    auto oracle = exact_bisector_oracle(sets, 1);
    if (!oracle.has_value()) continue;
    BisectionOptions opts;
    opts.eps = 0;
    opts.seed = 1000 + i;
    auto res = find_bisecting_polynomial(sets, 1, opts);
    REQUIRE(res.cert.all_pass);
    ++agreements;
  }
  CHECK(agreements >= 30);
}
