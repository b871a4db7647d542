#pragma once

#include <optional>
#include <vector>

#include "polypart/multipoly.hpp"
#include "polypart/partition.hpp"
#include "polypart/report.hpp"
#include "polypart/unipoly.hpp"

namespace polypart {

struct LineSet {
  std::vector<Line> lines;  // normalized, duplicates rejected

  void add(const Line& line);
  size_t size() const { return lines.size(); }
};

// Family of plane algebraic curves of degree <= degree_bound, where any
// determining_points points lie on at most max_through common curves.
struct CurveSet {
  std::vector<MultiPoly> curves;
  int determining_points = 3;  // the family parameter k
  int max_through = 1;         // C
  int degree_bound = 2;        // b

  void add(const MultiPoly& curve);  // rejects zero and scaled duplicates
  size_t size() const { return curves.size(); }
};

// Exact incidence count: pairs (p, l) with p on l.
long count_incidences_lines(const std::vector<Point>& points,
                            const LineSet& lines);

// Exact incidence count: pairs (p, curve) with curve(p) == 0.
long count_incidences_curves(const std::vector<Point>& points,
                             const CurveSet& curves);

// P = {1..k} x {1..2k^2}, L = {y = a x + b : a in 1..k, b in 1..k^2}.
// Every line carries exactly k points, so I = k^4.
void generate_extremal_grid(int k, std::vector<Point>& points, LineSet& lines);

// P = g x g integer grid; curves = all distinct circles through >= 3 grid
// points with squared radius <= g^2. Family parameters (k=3, C=1, b=2).
void generate_circle_instance(int g, std::vector<Point>& points,
                              CurveSet& curves);

// Point (px,py) <-> line y = px x - py. Throws if a vertical line remains;
// callers shear first (see shear_instance).
void dualize(const std::vector<Point>& points, const LineSet& lines,
             std::vector<Point>& dual_points, LineSet& dual_lines);

// x' = x + s y on points, matching substitution on lines. Returns a shear
// factor (recorded by callers in reports) that removes vertical lines.
Rational shear_to_remove_vertical(std::vector<Point>& points, LineSet& lines,
                                  std::uint64_t seed);

struct StAuditOptions {
  std::optional<Rational> r;  // default per instance shape
  Rational eps = rat(1, 20);
  std::uint64_t seed = 0;
  // Outside the sqrt(n) <= m <= n^2 range only the n + m^2 bound is checked;
  // report_out_of_range adds the partition quantities anyway.
  bool report_out_of_range = false;
};

// Reproduces the partition-based incidence decomposition checks:
// (a) I <= n + m^2, (b) sum over cells of lines meeting them, (c) sum of
// squared cell sizes, (d) per-line zero counts on Z.
AuditReport audit_szemeredi_trotter(const std::vector<Point>& points,
                                    const LineSet& lines,
                                    const StAuditOptions& opts = {});

// I / (m^(2/3) n^(2/3) + m + n), rounded upward to a rational.
Rational st_bound_ratio(const std::vector<Point>& points, const LineSet& lines);

// Checks the explicit-constant curve bounds:
// (a) I <= (k-1) n + C m binom(m-1, k-1), (b) I <= m + b^2 n (n-1),
// plus the target-exponent ratio entries.
AuditReport audit_curve_bounds(const std::vector<Point>& points,
                               const CurveSet& curves);

}  // namespace polypart
