#pragma once

// Exact dense linear algebra over the rationals.

#include "rational.hpp"

#include <vector>

namespace flagcalc {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form in place; zero rows are dropped. Returns the
/// pivot column of each remaining row.
std::vector<int> rref(Matrix& rows, int ncols);

int matrix_rank(Matrix rows, int ncols);

/// Basis of {v : rows * v = 0}.
std::vector<Vector> kernel(Matrix rows, int ncols);

Rational determinant(Matrix square);

/// Reduce v against an RREF basis (rows + their pivots); the result has zero
/// entries in every pivot column.
Vector reduce(Vector v, const Matrix& rref_rows, const std::vector<int>& pivots);

}  // namespace flagcalc
