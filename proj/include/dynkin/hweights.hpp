#pragma once

#include <vector>

#include "dynkin/lattice.hpp"

namespace dynkin {

/// lambda1 >= lambda2 in the two-sided dominance order: equal box counts and
/// a componentwise nonnegative root-basis shape for the difference.
bool po_geq(const MarkedPair& pair, const TwoSidedWeight& lambda1, const TwoSidedWeight& lambda2);

/// A positive functional that is nonpositive on the positive root cone.
/// Exists exactly for indefinite indecomposable diagrams: u > 0 with
/// C^T u < 0 componentwise. ht is nonnegative on dominant weights and
/// nonpositive on positive roots, which bounds upward intervals.
struct HtFunctional {
    IntVec u;     // positive, minimal integers
    IntVec ct_u;  // C^T u, all entries negative

    Int ht(const Weight& w) const {
        Int h(0);
        for (int p = 0; p < w.size(); ++p) h += u[p] * int_of(w[p]);
        return h;
    }
    Rat ht(const RootVector& x) const {
        Rat h(0);
        for (size_t q = 0; q < x.size(); ++q) h += x[q] * Rat(ct_u[q]);
        return h;
    }
};

/// Throws NotIndefinite when no such functional exists. The equality system
/// C^T u = -1 is tried first; Fourier-Motzkin elimination on the strict
/// system is the fallback.
HtFunctional ht_functional(const DynkinDiagram& d);

/// U(gamma) = { lambda in P+ : lambda - gamma in Q+ }, finite for indefinite
/// diagrams with det != 0. gamma need not be dominant (the set is empty when
/// ht(gamma) < 0). Result sorted lexicographically.
std::vector<Weight> interval_up(const DynkinDiagram& d, const Weight& gamma,
                                long long budget = 10'000'000);

/// Explicit kernels behind interval_up (reference and parallel scan).
std::vector<Weight> interval_up_serial(const DynkinDiagram& d, const Weight& gamma,
                                       long long budget);
std::vector<Weight> interval_up_openmp(const DynkinDiagram& d, const Weight& gamma,
                                       long long budget);

/// U(gamma, s) = { lambda in H2+ : lambda >= gamma, dep(lambda - gamma) = s },
/// finite for every s. Empty for s < 0.
std::vector<TwoSidedWeight> interval_up_h2(const MarkedPair& pair, const TwoSidedWeight& gamma,
                                           long long s, long long budget = 10'000'000);

/// I(lambda1, lambda2) = { gamma : lambda1 >= gamma >= lambda2 }. Requires
/// lambda1 >= lambda2 (throws NotComparable). Cross-checked against the
/// specialized interval on Z_k at two chain lengths.
std::vector<TwoSidedWeight> interval_between(const MarkedPair& pair, const TwoSidedWeight& lambda1,
                                             const TwoSidedWeight& lambda2,
                                             long long budget = 10'000'000);

/// Weights beta with lambda1 >= beta >= lambda2 on a fixed diagram, by a box
/// scan over the root-cone coefficients of lambda1 - lambda2.
std::vector<Weight> interval_between_on_diagram(const DynkinDiagram& d, const Weight& lambda1,
                                                const Weight& lambda2, long long budget);

/// True when the marked diagram is a simply laced chain marked at one end
/// and numbered consecutively from the other (the A-series shape whose
/// a-sequence is 1, 2, 3, ...).
bool is_end_marked_chain(const MarkedDiagram& md);

}  // namespace dynkin
