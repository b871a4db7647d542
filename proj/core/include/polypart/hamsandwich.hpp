#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polypart/multipoly.hpp"
#include "polypart/rational.hpp"

namespace polypart {

using PointSet = std::vector<Point>;

// Veronese lift: the vector of all nonconstant monomials of total degree
// <= max_degree evaluated at p, in the global monomial order.
std::vector<Rational> veronese_lift(const Point& p, int max_degree);

struct SetCounts {
  long pos = 0;
  long neg = 0;
  long zero = 0;
  bool pass = false;
};

// Per-set exact sign counts against the bisection condition with additive
// slack ceil(eps * |A|) per side. Points with f == 0 count toward neither side.
struct BisectionCertificate {
  std::vector<SetCounts> sets;
  Rational slack = 0;
  bool all_pass = false;
};

// Side cap for a set of the given size: floor(n/2) + ceil(eps*n).
long bisection_cap(long set_size, const Rational& eps);

// Exact certificate for f against the sets. Throws if f is zero.
BisectionCertificate verify_bisection(const MultiPoly& f,
                                      const std::vector<PointSet>& sets,
                                      const Rational& eps);

struct BisectionOptions {
  Rational eps = rat(1, 20);
  int restarts = 64;
  int max_iters = 15000;
  std::uint64_t seed = 0;
  std::string trace_csv;  // per-iteration (iteration, loss, sigma) dump
};

struct BisectionResult {
  MultiPoly f;
  BisectionCertificate cert;
  int restart_index = 0;
};

struct BisectionNotFound : std::runtime_error {
  explicit BisectionNotFound(BisectionCertificate best_)
      : std::runtime_error("bisection-not-found"), best(std::move(best_)) {}
  BisectionCertificate best;
};

// Searches for a nonzero polynomial of degree <= max_degree whose exact
// certificate passes for every set. Requires monomial_count(d, max_degree)
// >= number of sets and nonempty sets. Never returns unverified output;
// throws BisectionNotFound (carrying the best certificate) after the restart
// budget is exhausted.
BisectionResult find_bisecting_polynomial(const std::vector<PointSet>& sets,
                                          int max_degree,
                                          const BisectionOptions& opts = {});

// Tiny-scale exhaustive oracle: candidate hyperplanes in lifted space spanned
// by subsets of lifted points. Requires total points <= 14 and
// monomial_count(d, max_degree) <= 4. Test use only.
std::optional<MultiPoly> exact_bisector_oracle(
    const std::vector<PointSet>& sets, int max_degree);

}  // namespace polypart
