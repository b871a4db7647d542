#include "polypart/unipoly.hpp"

#include <algorithm>
#include <numeric>

namespace polypart {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Rational coefficient vector -> primitive integer vector, same sign pattern.
std::vector<Integer> primitive_integer(const std::vector<Rational>& c) {
  Integer lcm = 1;
  for (const auto& q : c) {
    Integer den(q.get_den());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> z(c.size());
  Integer content = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    Rational scaled = c[i] * Rational(lcm);
    z[i] = Integer(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& v : z) v /= content;
  return z;
}

void trim_int(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void make_primitive(std::vector<Integer>& c) {
  trim_int(c);
  Integer content = 0;
  for (const auto& v : c)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& v : c) v /= content;
}

// R such that m*A = Q*B + R with m a positive power of |lc(B)|.
std::vector<Integer> pseudo_remainder(std::vector<Integer> a,
                                      const std::vector<Integer>& b) {
  int db = static_cast<int>(b.size()) - 1;
  Integer lead = abs(b.back());
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    Integer top = a.back();
    for (auto& v : a) v *= lead;
    // subtract (top * t^(da-db)) * B, adjusted for the sign of lc(B)
    Integer factor = b.back() > 0 ? top : -top;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
    trim_int(a);
    if (a.empty()) break;
  }
  return a;
}

int sign_at_int(const std::vector<Integer>& c, const Rational& x) {
  // Horner over rationals.
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return sign_of(acc);
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::deflate(const Rational& root) const {
  if (is_zero()) throw ZeroPolynomialError();
  std::vector<Rational> b(coeffs_.size() - 1, Rational(0));
  Rational carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = coeffs_[i] + root * carry;
    b[i - 1] = carry;
  }
  if (coeffs_[0] + root * carry != 0)
    throw std::invalid_argument("deflate: not a root");
  return UniPoly(std::move(b));
}

UniPoly restrict_to_segment(const MultiPoly& f, const Point& p,
                            const Point& q) {
  if (p.size() != q.size() ||
      static_cast<int>(p.size()) != f.num_vars())
    throw std::invalid_argument("restrict_to_segment: dimension mismatch");
  if (p == q)
    throw std::invalid_argument("restrict_to_segment: p == q");
  int d = f.num_vars();
  std::vector<int> maxe(d, 0);
  for (const auto& [e, c] : f.coeffs())
    for (int i = 0; i < d; ++i) maxe[i] = std::max(maxe[i], e[i]);
  // powers[i][k] = (p_i + t (q_i - p_i))^k
  std::vector<std::vector<UniPoly>> powers(d);
  for (int i = 0; i < d; ++i) {
    UniPoly lin(std::vector<Rational>{p[i], q[i] - p[i]});
    powers[i].resize(maxe[i] + 1);
    powers[i][0] = UniPoly(std::vector<Rational>{Rational(1)});
    for (int k = 1; k <= maxe[i]; ++k) powers[i][k] = powers[i][k - 1] * lin;
  }
  UniPoly g;
  for (const auto& [e, c] : f.coeffs()) {
    UniPoly term(std::vector<Rational>{c});
    for (int i = 0; i < d; ++i)
      if (e[i] > 0) term = term * powers[i][e[i]];
    g = g + term;
  }
  return g;
}

SturmChain::SturmChain(const UniPoly& g) {
  if (g.is_zero()) throw ZeroPolynomialError();
  std::vector<Integer> s0 = primitive_integer(g.coeffs());
  chain_.push_back(s0);
  if (static_cast<int>(s0.size()) - 1 < 1) return;
  std::vector<Integer> s1(s0.size() - 1);
  for (size_t i = 1; i < s0.size(); ++i)
    s1[i - 1] = s0[i] * Integer(static_cast<long>(i));
  make_primitive(s1);
  chain_.push_back(s1);
  while (chain_.back().size() > 1) {
    std::vector<Integer> r =
        pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& v : r) v = -v;
    make_primitive(r);
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int v = 0, prev = 0;
  for (const auto& poly : chain_) {
    int s = sign_at_int(poly, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::variations_at_pos_inf() const {
  int v = 0, prev = 0;
  for (const auto& poly : chain_) {
    int s = sgn(poly.back());
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::variations_at_neg_inf() const {
  int v = 0, prev = 0;
  for (const auto& poly : chain_) {
    int deg = static_cast<int>(poly.size()) - 1;
    int s = sgn(poly.back()) * (deg % 2 == 0 ? 1 : -1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count_half_open(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all_roots() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

int count_roots_in_interval(const UniPoly& g, const Rational& a,
                            const Rational& b, bool open) {
  if (g.is_zero()) throw ZeroPolynomialError();
  if (!(a < b)) throw std::invalid_argument("count_roots: need a < b");
  UniPoly h = g;
  bool root_a = false, root_b = false;
  while (!h.is_zero() && h.degree() >= 1 && h.eval(a) == 0) {
    root_a = true;
    h = h.deflate(a);
  }
  while (!h.is_zero() && h.degree() >= 1 && h.eval(b) == 0) {
    root_b = true;
    h = h.deflate(b);
  }
  int inner = 0;
  if (h.degree() >= 1) {
    SturmChain chain(h);
    inner = chain.count_half_open(a, b);
  }
  return open ? inner : inner + (root_a ? 1 : 0) + (root_b ? 1 : 0);
}

int count_real_roots(const UniPoly& g) {
  if (g.is_zero()) throw ZeroPolynomialError();
  if (g.degree() < 1) return 0;
  return SturmChain(g).count_all_roots();
}

Rational root_bound(const UniPoly& g) {
  if (g.is_zero()) throw ZeroPolynomialError();
  Rational lead = rat_abs(g.coeffs().back());
  Rational m = 0;
  for (const auto& c : g.coeffs()) m = std::max(m, rat_abs(c));
  return Rational(1) + m / lead;
}

namespace {

void isolate_rec(const SturmChain& chain, const UniPoly& g, const Rational& lo,
                 const Rational& hi, int count,
                 std::vector<std::pair<Rational, Rational>>& out) {
  if (count <= 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (g.eval(mid) == 0) {
    // Rational root exactly at the midpoint: carve out a window around it.
    Rational w = (hi - lo) / 4;
    while (chain.count_half_open(mid - w, mid + w) != 1 ||
           g.eval(mid - w) == 0 || g.eval(mid + w) == 0)
      w /= 2;
    int left = chain.count_half_open(lo, mid - w);
    int right = chain.count_half_open(mid + w, hi);
    isolate_rec(chain, g, lo, mid - w, left, out);
    out.emplace_back(mid, mid);
    isolate_rec(chain, g, mid + w, hi, right, out);
    return;
  }
  int left = chain.count_half_open(lo, mid);
  isolate_rec(chain, g, lo, mid, left, out);
  isolate_rec(chain, g, mid, hi, count - left, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_roots(const UniPoly& g) {
  if (g.is_zero()) throw ZeroPolynomialError();
  std::vector<std::pair<Rational, Rational>> out;
  if (g.degree() < 1) return out;
  SturmChain chain(g);
  int total = chain.count_all_roots();
  if (total == 0) return out;
  // Grow the box by doubling instead of jumping to the Cauchy bound, which
  // can be astronomically wide for polynomials with lopsided coefficients.
  Rational b = 1;
  while (chain.count_half_open(-b, b) < total || g.eval(b) == 0 ||
         g.eval(-b) == 0)
    b *= 2;
  isolate_rec(chain, g, -b, b, total, out);
  return out;
}

Line::Line(const Rational& a_, const Rational& b_, const Rational& c_)
    : a(a_), b(b_), c(c_) {
  if (a == 0 && b == 0)
    throw std::invalid_argument("Line: (a,b) must be nonzero");
  // Scale to a primitive integer triple with positive leading entry.
  Integer lcm = 1;
  for (const Rational* q : {&a, &b, &c}) {
    Integer den(q->get_den());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  Rational scale(lcm);
  a *= scale;
  b *= scale;
  c *= scale;
  Integer g = 0;
  for (const Rational* q : {&a, &b, &c}) {
    Integer num(q->get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g > 1) {
    Rational inv(g);
    a /= inv;
    b /= inv;
    c /= inv;
  }
  int lead = a != 0 ? sign_of(a) : (b != 0 ? sign_of(b) : sign_of(c));
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("Line::through: p == q");
  Rational a = p[1] - q[1];
  Rational b = q[0] - p[0];
  Rational c = -(a * p[0] + b * p[1]);
  return Line(a, b, c);
}

std::pair<Point, Point> Line::span() const {
  if (b != 0)
    return {Point{Rational(0), -c / b}, Point{Rational(1), (-c - a) / b}};
  return {Point{-c / a, Rational(0)}, Point{-c / a, Rational(1)}};
}

bool Line::operator<(const Line& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

LineZeroResult line_zero_intersections(const MultiPoly& f, const Line& line) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (f.num_vars() != 2)
    throw std::invalid_argument("line_zero_intersections: need 2 variables");
  auto [p, q] = line.span();
  UniPoly g = restrict_to_segment(f, p, q);
  if (g.is_zero()) return {true, 0};
  return {false, count_real_roots(g)};
}

}  // namespace polypart
