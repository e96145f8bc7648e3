#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace qhd {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;  // row-major

// Diagonal of the Smith normal form: nonnegative, each entry dividing the
// next, length min(rows, cols). Zero rows/cols contribute trailing zeros.
std::vector<Int> smith_diagonal(IntMatrix a);

// Invariant factors of Z^cols modulo the lattice spanned by the rows of a:
// the SNF diagonal entries > 1 in divisibility order, then one 0 per free
// rank. An empty result means the trivial group.
std::vector<Int> cokernel_invariants(const IntMatrix& a, size_t cols);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(IntMatrix a);

// Sylvester criterion for a symmetric matrix: kth leading principal minor
// has sign (-1)^k for k = 1..n.
bool is_negative_definite(const IntMatrix& a);

}  // namespace qhd
