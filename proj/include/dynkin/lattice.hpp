#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "dynkin/diagram.hpp"
#include "dynkin/hvector.hpp"
#include "dynkin/rational.hpp"

namespace dynkin {

/// Element of the weight lattice in the fundamental-weight basis: coords[p]
/// is the value on the simple coroot of node p.
struct Weight {
    std::vector<long long> coords;

    Weight() = default;
    explicit Weight(std::vector<long long> c) : coords(std::move(c)) {}
    explicit Weight(int n) : coords(n, 0) {}

    int size() const { return static_cast<int>(coords.size()); }
    long long& operator[](int p) { return coords[p]; }
    long long operator[](int p) const { return coords[p]; }

    bool dominant() const {
        for (long long c : coords)
            if (c < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (long long c : coords)
            if (c != 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    auto operator<=>(const Weight&) const = default;
};

/// Rational coefficients in the simple-root basis.
using RootVector = RatVec;

/// Unique expansion of w in the simple roots (solves C x = coords).
/// Throws SingularCartan when det = 0.
RootVector weight_to_root_basis(const DynkinDiagram& d, const Weight& w);

bool all_integral(const RootVector& x);
bool in_root_lattice(const DynkinDiagram& d, const Weight& w);

/// Sum of root-basis coefficients when they are nonnegative integers;
/// nullopt when w is not in the nonnegative root cone.
std::optional<Int> root_cone_height(const DynkinDiagram& d, const Weight& w);

/// gamma specialized on Z_k: coordinate x_{i(p)} + y_{ibar(p)} at node p.
/// Requires k >= ell(gamma) - d1 - d2 (throws SupportTooWide).
Weight specialize(const ZkDiagram& zk, const TwoSidedWeight& gamma);

/// Minimal admissible chain length for gamma on this pair.
int min_chain_length(const MarkedPair& pair, const TwoSidedWeight& gamma);

/// The sequence a_1..a_count attached to an extensible marked diagram:
/// -delta(X) w_p is congruent to a_{j(p)} times the end fundamental weight
/// modulo the root lattice of every admissible chain extension X(m).
/// Values are memoized per marked diagram (thread safe).
IntVec a_sequence(const MarkedDiagram& md, int count);

/// |gamma| = delta2 * sum x_i a_i(X1) - delta1 * sum y_i a_i(X2).
Int number_of_boxes(const MarkedPair& pair, const TwoSidedWeight& gamma);

/// (sum x_i a_i(X1)) / delta1 = (sum y_i a_i(X2)) / delta2; requires
/// number_of_boxes = 0 (throws NonzeroBoxes).
Int depth(const MarkedPair& pair, const TwoSidedWeight& gamma);

bool equivalent(const MarkedPair& pair, const TwoSidedWeight& lambda, const TwoSidedWeight& mu);

/// Root-basis shape of a zero-box gamma: b on the X1 side, the constant s
/// across the middle, c on the X2 side. Reconstructs gamma^(k) for every
/// admissible k.
struct BiciDecomposition {
    IntVec b;  // indices 1..l-1
    Int s = 0;
    IntVec c;  // indices 1..r-1
    int probe_k = 0;
    std::optional<int> skipped_k0;

    bool nonnegative() const {
        if (s < 0) return false;
        for (const Int& x : b)
            if (x < 0) return false;
        for (const Int& x : c)
            if (x < 0) return false;
        return true;
    }
};

/// probe_k < 0 picks the smallest admissible k. The expansion is recomputed
/// at the next admissible k as a self-check.
BiciDecomposition bici_decomposition(const MarkedPair& pair, const TwoSidedWeight& gamma,
                                     int probe_k = -1);

/// The closed-form value (det X1 delta2 + det X2 delta1 + (k-2) delta1
/// delta2) / det Z_k for adjacent bridge nodes u, v with i(v) = i(u)+1,
/// asserted against the direct root-basis computation of w_u - w_v.
Rat cu_minus_cv(const MarkedPair& pair, const ZkDiagram& zk, int u, int v);

/// Bridge nodes: the middle chain plus the two marks.
std::vector<int> bridge_nodes(const ZkDiagram& zk);

}  // namespace dynkin
