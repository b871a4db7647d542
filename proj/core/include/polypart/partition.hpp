#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polypart/hamsandwich.hpp"
#include "polypart/multipoly.hpp"
#include "polypart/report.hpp"
#include "polypart/unipoly.hpp"

namespace polypart {

struct PartitionResult {
  std::vector<MultiPoly> factors;           // f_1, ..., f_t
  int total_degree = 0;                     // sum of factor degrees
  std::vector<std::vector<int>> point_signs;  // per point, in {-1,0,+1}^t
  // Nonzero sign vectors -> indices of points realizing them.
  std::map<std::vector<int>, std::vector<int>> cells;
  std::vector<int> boundary_points;         // some coordinate is 0 (P on Z)
  std::vector<BisectionCertificate> round_certs;
  int rounds = 0;                           // t
  long max_cell_size = 0;
  std::vector<std::string> log;             // degree escalations etc.

  // Deterministic text serialization: factors in fixture format plus
  // per-point sign strings over {-,0,+}.
  std::string serialize() const;
};

struct PartitionOptions {
  Rational eps = rat(1, 20);
  std::uint64_t seed = 0;
  int max_degree_escalations = 3;  // per round, then the failure propagates
};

// Builds an r-partitioning polynomial as a product of verified bisecting
// factors; cells are sign classes of the factor vector. Requires 1 < r <= |P|.
PartitionResult build_partition(const std::vector<Point>& points,
                                const Rational& r,
                                const PartitionOptions& opts = {});

std::vector<int> sign_vector(const Point& p,
                             const std::vector<MultiPoly>& factors);

struct LineSignClasses {
  bool contained = false;  // some factor vanishes identically on the line
  std::set<std::vector<int>> classes;  // distinct nonzero sign vectors
  int root_count = 0;  // distinct zeros of the factor product along the line
};

// Decomposes a line by the roots of all factors along it and collects the
// sign vectors of rational sample points inside each maximal interval.
LineSignClasses sign_classes_along_line(const std::vector<MultiPoly>& factors,
                                        const Line& line);

// Checks (a) max cell size, (b) the planar degree budget, (c) per-line sign
// class caps, (d) the Warren cell-count bound. Failures are report entries.
AuditReport audit_partition(const PartitionResult& pr,
                            const std::vector<Point>& points, const Rational& r,
                            const std::vector<Line>& lines = {});

}  // namespace polypart
