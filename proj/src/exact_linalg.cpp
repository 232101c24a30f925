#include "dynkin/exact_linalg.hpp"

#include <stdexcept>

#include "dynkin/errors.hpp"

namespace dynkin {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

Int bareiss_det(IntMatrix mat) {
    if (mat.n != mat.m) throw std::logic_error("bareiss_det: matrix not square");
    const int n = mat.n;
    if (n == 0) return 1;

    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (mat.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (mat.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(mat.at(k, j), mat.at(piv, j));
            sign = -sign;
        }
        const Int pivot = mat.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = mat.at(i, j) * pivot - mat.at(i, k) * mat.at(k, j);
                // Exact by the Bareiss identity: prev divides t.
                mpz_divexact(mat.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            mat.at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? mat.at(n - 1, n - 1) : Int(-mat.at(n - 1, n - 1));
}

namespace {

// Gauss-Jordan over the rationals on [A | rhs...]; exact, any nonzero pivot.
// Returns false when A is singular.
bool eliminate(std::vector<RatVec>& rows, int n, int cols) {
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (rows[i][k] != 0) { piv = i; break; }
        if (piv < 0) return false;
        std::swap(rows[k], rows[piv]);
        const Rat p = rows[k][k];
        for (int j = k; j < cols; ++j) rows[k][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == k || rows[i][k] == 0) continue;
            const Rat f = rows[i][k];
            for (int j = k; j < cols; ++j) rows[i][j] -= f * rows[k][j];
        }
    }
    return true;
}

}  // namespace

std::optional<RatVec> solve_exact(const IntMatrix& A, const RatVec& b) {
    if (A.n != A.m || static_cast<int>(b.size()) != A.n)
        throw std::logic_error("solve_exact: shape mismatch");
    const int n = A.n;
    std::vector<RatVec> rows(n, RatVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = Rat(A.at(i, j));
        rows[i][n] = b[i];
    }
    if (!eliminate(rows, n, n + 1)) return std::nullopt;
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = rows[i][n];
    return x;
}

std::optional<std::vector<RatVec>> invert_exact(const IntMatrix& A) {
    if (A.n != A.m) throw std::logic_error("invert_exact: matrix not square");
    const int n = A.n;
    std::vector<RatVec> rows(n, RatVec(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = Rat(A.at(i, j));
        rows[i][n + i] = 1;
    }
    if (!eliminate(rows, n, 2 * n)) return std::nullopt;
    std::vector<RatVec> inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = rows[i][n + j];
    return inv;
}

}  // namespace dynkin
