#include "polypart/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "polypart/linalg.hpp"
#include "polypart/rng.hpp"

namespace polypart {

namespace {

// Scale-canonical form: primitive integer coefficients, first coefficient in
// the monomial order positive.
MultiPoly normalize_curve(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero curve polynomial");
  Integer lcm = 1;
  for (const auto& [e, c] : f.coeffs()) {
    Integer den(c.get_den());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  Integer gcd = 0;
  for (const auto& [e, c] : f.coeffs()) {
    Rational scaled = c * Rational(lcm);
    Integer num(scaled.get_num());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale = Rational(lcm) / Rational(gcd);
  if (sign_of(f.coeffs().begin()->second) < 0) scale = -scale;
  return f * scale;
}

}  // namespace

void LineSet::add(const Line& line) {
  if (std::find(lines.begin(), lines.end(), line) != lines.end())
    throw std::invalid_argument("duplicate line");
  lines.push_back(line);
}

void CurveSet::add(const MultiPoly& curve) {
  MultiPoly canon = normalize_curve(curve);
  if (canon.degree() > degree_bound)
    throw std::invalid_argument("curve degree exceeds the family bound");
  for (const auto& c : curves)
    if (c == canon) throw std::invalid_argument("duplicate curve");
  curves.push_back(canon);
}

long count_incidences_lines(const std::vector<Point>& points,
                            const LineSet& lines) {
  long count = 0;
  for (const auto& line : lines.lines)
    for (const auto& p : points)
      if (line.value_at(p) == 0) ++count;
  return count;
}

long count_incidences_curves(const std::vector<Point>& points,
                             const CurveSet& curves) {
  long count = 0;
  for (const auto& curve : curves.curves)
    for (const auto& p : points)
      if (curve.sign_at(p) == 0) ++count;
  return count;
}

void generate_extremal_grid(int k, std::vector<Point>& points,
                            LineSet& lines) {
  if (k < 1) throw std::invalid_argument("extremal grid: k >= 1");
  points.clear();
  lines.lines.clear();
  for (int x = 1; x <= k; ++x)
    for (int y = 1; y <= 2 * k * k; ++y)
      points.push_back({rat(x), rat(y)});
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k * k; ++b)
      lines.add(Line(rat(a), rat(-1), rat(b)));  // y = a x + b
}

void generate_circle_instance(int g, std::vector<Point>& points,
                              CurveSet& curves) {
  if (g < 2) throw std::invalid_argument("circle instance: g >= 2");
  points.clear();
  curves = CurveSet{};
  curves.determining_points = 3;
  curves.max_through = 1;
  curves.degree_bound = 2;
  for (int x = 1; x <= g; ++x)
    for (int y = 1; y <= g; ++y) points.push_back({rat(x), rat(y)});

  Rational r2_max = rat(g) * rat(g);
  std::set<std::string> seen;
  size_t m = points.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t l = j + 1; l < m; ++l) {
        const Point &p = points[i], &q = points[j], &s = points[l];
        // Circumcenter from the two perpendicular-bisector equations.
        Matrix a = {{2 * (q[0] - p[0]), 2 * (q[1] - p[1])},
                    {2 * (s[0] - p[0]), 2 * (s[1] - p[1])}};
        Rational det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if (det == 0) continue;  // collinear
        Rational b0 = q[0] * q[0] - p[0] * p[0] + q[1] * q[1] - p[1] * p[1];
        Rational b1 = s[0] * s[0] - p[0] * p[0] + s[1] * s[1] - p[1] * p[1];
        Rational cx = (b0 * a[1][1] - a[0][1] * b1) / det;
        Rational cy = (a[0][0] * b1 - b0 * a[1][0]) / det;
        Rational r2 = (p[0] - cx) * (p[0] - cx) + (p[1] - cy) * (p[1] - cy);
        if (r2 > r2_max) continue;
        MultiPoly circle(2);
        circle.set_coeff({2, 0}, rat(1));
        circle.set_coeff({0, 2}, rat(1));
        circle.set_coeff({1, 0}, -2 * cx);
        circle.set_coeff({0, 1}, -2 * cy);
        circle.set_coeff({0, 0}, cx * cx + cy * cy - r2);
        MultiPoly canon = normalize_curve(circle);
        std::string key = canon.to_text();
        if (seen.insert(key).second) curves.curves.push_back(canon);
      }
}

void dualize(const std::vector<Point>& points, const LineSet& lines,
             std::vector<Point>& dual_points, LineSet& dual_lines) {
  dual_points.clear();
  dual_lines.lines.clear();
  for (const auto& line : lines.lines) {
    if (line.b == 0)
      throw std::invalid_argument("dualize: vertical line present");
    Rational slope = -line.a / line.b;
    Rational intercept = -line.c / line.b;
    dual_points.push_back({slope, -intercept});
  }
  for (const auto& p : points)
    dual_lines.add(Line(p[0], rat(-1), -p[1]));  // y = px x - py
}

Rational shear_to_remove_vertical(std::vector<Point>& points, LineSet& lines,
                                  std::uint64_t seed) {
  SplitRng rng(seed);
  Rational s = 0;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    s = Rational(static_cast<long>(rng.below(1 << 16)) + 1, 1 << 8);
    s.canonicalize();
    bool ok = true;
    for (const auto& line : lines.lines)
      if (line.b - line.a * s == 0) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  for (auto& p : points) p[0] += s * p[1];
  LineSet sheared;
  for (const auto& line : lines.lines)
    sheared.add(Line(line.a, line.b - line.a * s, line.c));
  lines = std::move(sheared);
  return s;
}

AuditReport audit_szemeredi_trotter(const std::vector<Point>& points,
                                    const LineSet& lines,
                                    const StAuditOptions& opts) {
  AuditReport report;
  long m = static_cast<long>(points.size());
  long n = static_cast<long>(lines.size());
  long incidences = count_incidences_lines(points, lines);
  report.add("incidence_vs_n_plus_m2", Rational(incidences),
             Rational(n) + Rational(m) * Rational(m));

  // Outside the sqrt(n) <= m range the n + m^2 bound is the whole story.
  bool in_range = Rational(m) * Rational(m) >= Rational(n);
  if (!in_range && !opts.report_out_of_range) return report;

  Rational r;
  if (opts.r) {
    r = *opts.r;
  } else if (m == n) {
    r = round_to_grid(std::pow(static_cast<double>(n), 2.0 / 3.0), 16);
  } else {
    r = round_to_grid(std::pow(static_cast<double>(m), 4.0 / 3.0) /
                          std::pow(static_cast<double>(n), 2.0 / 3.0),
                      16);
  }
  if (r < 2) r = 2;
  if (r > Rational(m)) r = Rational(m);
  if (!(r > 1)) return report;  // too few points to partition

  PartitionOptions popts;
  popts.eps = opts.eps;
  popts.seed = opts.seed;
  PartitionResult pr = build_partition(points, r, popts);
  long td = pr.total_degree;

  long cell_line_sum = 0;  // sum over cells of lines meeting them
  long worst_zero_hits = 0;
  for (const auto& line : lines.lines) {
    auto sc = sign_classes_along_line(pr.factors, line);
    if (sc.contained) continue;
    for (const auto& sv : sc.classes)
      if (pr.cells.count(sv)) ++cell_line_sum;
    worst_zero_hits = std::max(worst_zero_hits,
                               static_cast<long>(sc.root_count));
  }
  report.add("cell_line_incidences", Rational(cell_line_sum),
             Rational(td + 1) * Rational(n));

  Rational sq_sum = 0;
  for (const auto& [sv, idx] : pr.cells)
    sq_sum += Rational(static_cast<long>(idx.size())) *
              Rational(static_cast<long>(idx.size()));
  report.add("cell_size_squares", sq_sum,
             Rational(pr.max_cell_size) * Rational(m));

  report.add("line_zero_hits", Rational(worst_zero_hits), Rational(td));
  return report;
}

Rational st_bound_ratio(const std::vector<Point>& points,
                        const LineSet& lines) {
  long m = static_cast<long>(points.size());
  long n = static_cast<long>(lines.size());
  if (m < 1 || n < 1)
    throw std::invalid_argument("st_bound_ratio: need m, n >= 1");
  long incidences = count_incidences_lines(points, lines);
  if (incidences == 0) return Rational(0);
  double denom = std::pow(static_cast<double>(m), 2.0 / 3.0) *
                     std::pow(static_cast<double>(n), 2.0 / 3.0) +
                 m + n;
  return ceil_to_grid(incidences / denom, 32);
}

AuditReport audit_curve_bounds(const std::vector<Point>& points,
                               const CurveSet& curves) {
  AuditReport report;
  long m = static_cast<long>(points.size());
  long n = static_cast<long>(curves.size());
  long k = curves.determining_points;
  long incidences = count_incidences_curves(points, curves);

  Rational bound_a = Rational(k - 1) * Rational(n);
  if (m >= 1)
    bound_a += Rational(curves.max_through) * Rational(m) *
               Rational(binomial(m - 1, k - 1));
  report.add("incidence_vs_kn_plus_determinations", Rational(incidences),
             bound_a);

  Rational b2 = Rational(curves.degree_bound) * Rational(curves.degree_bound);
  report.add("incidence_vs_m_plus_b2n2", Rational(incidences),
             Rational(m) + b2 * Rational(n) * Rational(n - 1));

  if (m >= 1 && n >= 1) {
    double dm = static_cast<double>(m), dn = static_cast<double>(n);
    double kk = static_cast<double>(k);
    double target = std::pow(dm, kk / (2 * kk - 1)) *
                        std::pow(dn, (2 * kk - 2) / (2 * kk - 1)) +
                    dm + dn;
    Rational combo = ceil_to_grid(target, 16);
    report.add("target_exponent_combination", combo, combo);
    Rational ratio = ceil_to_grid(incidences / target, 32);
    report.add("target_ratio", ratio, ratio);
    double rchoice = std::pow(dm, 2 * kk / (2 * kk - 1)) /
                     std::pow(dn, 2 / (2 * kk - 1));
    Rational rr = ceil_to_grid(rchoice, 16);
    report.add("paper_r_choice", rr, rr);
  }
  return report;
}

}  // namespace polypart
