#include "polypart/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace polypart {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  // Same total degree: descending exponent of the first variable, etc.
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() < b.size();
}

std::vector<Exponents> nonconstant_monomials(int num_vars, int max_degree) {
  std::vector<Exponents> out;
  Exponents cur(num_vars, 0);
  // Enumerate all tuples with total degree <= max_degree, then sort.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars) {
      int total = std::accumulate(cur.begin(), cur.end(), 0);
      if (total >= 1) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

long monomial_count(int num_vars, int max_degree) {
  if (num_vars < 1 || max_degree < 0)
    throw std::invalid_argument("monomial_count: need d >= 1, D >= 0");
  Integer b = binomial(max_degree + num_vars, num_vars) - 1;
  return b.get_si();
}

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("MultiPoly: num_vars >= 1");
}

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.set_coeff(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(int num_vars, const Exponents& e,
                              const Rational& c) {
  MultiPoly p(num_vars);
  p.set_coeff(e, c);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : coeffs_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw std::invalid_argument("set_coeff: exponent arity mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("set_coeff: negative exponent");
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

Rational MultiPoly::eval(const Point& x) const {
  if (static_cast<int>(x.size()) != num_vars_)
    throw std::invalid_argument("eval: point dimension mismatch");
  // Power table per variable up to the max exponent used.
  std::vector<int> maxe(num_vars_, 0);
  for (const auto& [e, c] : coeffs_)
    for (int i = 0; i < num_vars_; ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<Rational>> pow(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    pow[i].resize(maxe[i] + 1);
    pow[i][0] = 1;
    for (int k = 1; k <= maxe[i]; ++k) pow[i][k] = pow[i][k - 1] * x[i];
  }
  Rational acc = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational term = c;
    for (int i = 0; i < num_vars_; ++i)
      if (e[i] > 0) term *= pow[i][e[i]];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("poly arity mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("poly arity mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) - c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("poly arity mismatch");
  MultiPoly r(num_vars_);
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) {
      Exponents e(num_vars_);
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      r.set_coeff(e, r.coeff(e) + ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(num_vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : coeffs_) r.set_coeff(e, k * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return num_vars_ == o.num_vars_ && coeffs_ == o.coeffs_;
}

MultiPoly MultiPoly::from_text(const std::string& text, int num_vars) {
  MultiPoly p(num_vars);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      // Skip blank lines.
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (blank) continue;
      throw std::invalid_argument("bad fixture line: " + line);
    }
    std::istringstream es(line.substr(0, colon));
    Exponents e;
    int x;
    while (es >> x) e.push_back(x);
    if (static_cast<int>(e.size()) != num_vars)
      throw std::invalid_argument("fixture exponent arity mismatch: " + line);
    std::string cs = line.substr(colon + 1);
    auto b = cs.find_first_not_of(" \t\r");
    auto last = cs.find_last_not_of(" \t\r");
    if (b == std::string::npos)
      throw std::invalid_argument("fixture missing coefficient: " + line);
    Rational c = parse_rational(cs.substr(b, last - b + 1));
    p.set_coeff(e, p.coeff(e) + c);
  }
  return p;
}

std::string MultiPoly::to_text() const {
  std::ostringstream os;
  for (const auto& [e, c] : coeffs_) {
    for (int i = 0; i < num_vars_; ++i) {
      if (i) os << ' ';
      os << e[i];
    }
    os << " : " << c.get_str() << '\n';
  }
  return os.str();
}

}  // namespace polypart
