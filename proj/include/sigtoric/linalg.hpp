#ifndef SIGTORIC_LINALG_HPP
#define SIGTORIC_LINALG_HPP

#include <vector>

#include "sigtoric/rational.hpp"

namespace sigtoric {

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<Int>>;

// Rank of a rational matrix by exact Gaussian elimination.
int rank(QMatrix m);

// Determinant of a square rational matrix.
Rational determinant(QMatrix m);

// Diagonal of an integer matrix after unimodular row/column reduction
// (elementary divisors up to reordering; their product is the index of the
// row lattice inside its saturation).
std::vector<Int> smith_diagonal(ZMatrix a);

// Basis of the saturation of the row space lattice: smallest pure sublattice
// of Z^n containing the rows. Rows of the result are the basis vectors.
ZMatrix saturated_row_basis(const ZMatrix& rows);

// Solve x * basis = target exactly over Q (basis rows independent).
// Returns empty vector when target is outside the row span.
std::vector<Rational> coords_in_row_basis(const ZMatrix& basis,
                                          const std::vector<Int>& target);

} // namespace sigtoric

#endif
