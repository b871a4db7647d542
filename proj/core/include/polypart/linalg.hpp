#pragma once

#include <optional>
#include <vector>

#include "polypart/rational.hpp"

namespace polypart {

using Matrix = std::vector<std::vector<Rational>>;

// Exact determinant of a square matrix (Gaussian elimination).
Rational determinant(Matrix m);

// A nonzero vector w with M w = 0, if the kernel is nontrivial.
// M has r rows and c columns, r < c or rank-deficient.
std::optional<std::vector<Rational>> kernel_vector(Matrix m, int cols);

}  // namespace polypart
