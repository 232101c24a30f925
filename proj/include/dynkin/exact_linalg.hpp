#pragma once

#include <optional>
#include <vector>

#include "dynkin/rational.hpp"

namespace dynkin {

// Dense integer matrix, row major. Small ranks only (diagram sizes).
struct IntMatrix {
    int n = 0, m = 0;
    IntVec a;  // n*m entries

    IntMatrix() = default;
    IntMatrix(int rows, int cols) : n(rows), m(cols), a(static_cast<size_t>(rows) * cols, 0) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * m + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * m + j]; }
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// det of the empty 0x0 matrix is 1.
Int bareiss_det(IntMatrix mat);

// Solves A x = b exactly over the rationals. Returns nullopt when A is
// singular. A must be square.
std::optional<RatVec> solve_exact(const IntMatrix& A, const RatVec& b);

// Exact inverse; nullopt when singular. Row major n*n rationals.
std::optional<std::vector<RatVec>> invert_exact(const IntMatrix& A);

}  // namespace dynkin
