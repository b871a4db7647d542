#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polypart/multipoly.hpp"
#include "polypart/partition.hpp"
#include "polypart/rational.hpp"

namespace polypart {

struct GeoTree {
  std::vector<Point> points;
  std::vector<std::pair<int, int>> edges;

  bool is_spanning_tree() const;  // n-1 edges, connected, acyclic
};

struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;  // normal . x + offset

  Rational value_at(const Point& p) const {
    Rational v = offset;
    for (size_t i = 0; i < normal.size(); ++i) v += normal[i] * p[i];
    return v;
  }
};

enum class CrossingMode { exact, sampled };

struct CrossingReport {
  long max_crossings = 0;
  Hyperplane witness;
  CrossingMode mode = CrossingMode::exact;
  bool lower_bound_only = false;
  long candidates_examined = 0;
};

// Exact mode enumerates candidate hyperplanes through d-point subsets with
// side/pivot perturbations plus axis-parallel mid-gap hyperplanes; the
// reported witness avoids every point and is re-verified. Sampled mode
// evaluates `sample_count` random hyperplanes and reports a lower bound.
CrossingReport crossing_number(const GeoTree& tree, CrossingMode mode,
                               long sample_count = 20000,
                               std::uint64_t seed = 0);

// Determinant of the (k+1)x(k+1) matrix with rows (1, Phi(z_i)); zero iff
// the tuple lies on a common zero set of degree <= max_degree.
Rational exceptional_tuple_det(const std::vector<Point>& tuple, int max_degree);

// Independent uniform shifts from a fine rational grid in (-delta, delta);
// resamples until the output points are pairwise distinct.
std::vector<Point> perturb_points(const std::vector<Point>& points,
                                  const Rational& delta, std::uint64_t seed);

// Half the minimum pairwise Chebyshev gap, capped at 1/1024.
Rational default_perturbation(const std::vector<Point>& points);

// True iff some factor vanishes somewhere on the closed segment [p, q].
bool segment_crosses_zero(const std::vector<MultiPoly>& factors,
                          const Point& p, const Point& q);

struct TreeLevelLog {
  long n = 0;
  Rational r = 0;
  int rounds = 0;
  int total_degree = 0;
  long cells = 0;
  long boundary = 0;
  long groups = 0;
  int perturb_retries = 0;
  int c_doublings = 0;
  bool fallback = false;
  bool base_case = false;
  // Retained only when keep_level_detail is set.
  std::vector<MultiPoly> factors;
  std::vector<Point> perturbed;
  std::vector<int> indices;                      // original point indices
  std::vector<std::pair<int, int>> level_edges;  // non-fallback group edges
};

struct TreeBuildOptions {
  long c = 8;  // cell capacity target; r = n / c per level
  Rational eps = rat(1, 20);
  std::uint64_t seed = 0;
  bool keep_level_detail = false;
};

struct TreeBuildResult {
  GeoTree tree;
  std::vector<TreeLevelLog> levels;
  long fallback_edges = 0;

  // One record per level: n, r, t, total_degree, #cells, #boundary, #groups,
  // retries.
  std::string log_text() const;
};

// Recursive partition-based construction; edges are reported on the original
// points, perturbation is internal to each level.
TreeBuildResult build_low_crossing_tree(const std::vector<Point>& points,
                                        const TreeBuildOptions& opts = {});

struct BoundConstants {
  Integer warren;                   // 6 (2D)^d
  std::optional<Integer> harnack;   // 1 + binom(D-1, 2), plane only
};

BoundConstants bound_constants(int dim, int max_degree);

}  // namespace polypart
