#pragma once

#include "polypart/io.hpp"

namespace polypart {

// n distinct points with integer coordinates uniform in [0, span)^dim;
// span defaults to ~4n for a non-degenerate spread.
std::vector<Point> random_points(long n, int dim, std::uint64_t seed,
                                 long span = 0);

// m random points plus n distinct lines, each through two random points of
// the set (so the instance carries incidences worth auditing).
Instance random_st_instance(long m, long n, std::uint64_t seed);

Instance grid_instance(int g);             // g x g integer grid, no lines
Instance extremal_grid_instance(int k);    // the I = k^4 construction
Instance circle_instance(int g);           // grid + rich circle family
Instance random_instance(long n, long num_lines, int dim, std::uint64_t seed);

}  // namespace polypart
