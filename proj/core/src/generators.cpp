#include "polypart/generators.hpp"

#include <algorithm>
#include <set>

#include "polypart/rng.hpp"

namespace polypart {

std::vector<Point> random_points(long n, int dim, std::uint64_t seed,
                                 long span) {
  if (n < 1 || dim < 1) throw std::invalid_argument("random_points: n, dim >= 1");
  if (span <= 0) span = std::max<long>(4 * n, 16);
  SplitRng rng(seed);
  std::set<Point> seen;
  std::vector<Point> out;
  while (static_cast<long>(out.size()) < n) {
    Point p;
    for (int q = 0; q < dim; ++q)
      p.push_back(rat(static_cast<long>(rng.below(span))));
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

Instance random_st_instance(long m, long n, std::uint64_t seed) {
  Instance inst;
  inst.dim = 2;
  inst.points = random_points(m, 2, seed);
  SplitRng rng(SplitRng(seed).split(1).next());
  std::set<Line> seen;
  long guard = 0;
  while (static_cast<long>(inst.lines.lines.size()) < n && guard < 100000) {
    ++guard;
    long i = static_cast<long>(rng.below(m));
    long j = static_cast<long>(rng.below(m));
    if (i == j || inst.points[i] == inst.points[j]) continue;
    Line line = Line::through(inst.points[i], inst.points[j]);
    if (seen.insert(line).second) inst.lines.lines.push_back(line);
  }
  if (static_cast<long>(inst.lines.lines.size()) < n)
    throw std::runtime_error("random_st_instance: could not draw enough lines");
  return inst;
}

Instance grid_instance(int g) {
  if (g < 1) throw std::invalid_argument("grid_instance: g >= 1");
  Instance inst;
  inst.dim = 2;
  for (int x = 1; x <= g; ++x)
    for (int y = 1; y <= g; ++y) inst.points.push_back({rat(x), rat(y)});
  return inst;
}

Instance extremal_grid_instance(int k) {
  Instance inst;
  inst.dim = 2;
  generate_extremal_grid(k, inst.points, inst.lines);
  return inst;
}

Instance circle_instance(int g) {
  Instance inst;
  inst.dim = 2;
  inst.has_curves = true;
  generate_circle_instance(g, inst.points, inst.curves);
  return inst;
}

Instance random_instance(long n, long num_lines, int dim, std::uint64_t seed) {
  if (dim == 2 && num_lines > 0) return random_st_instance(n, num_lines, seed);
  Instance inst;
  inst.dim = dim;
  inst.points = random_points(n, dim, seed);
  return inst;
}

}  // namespace polypart
