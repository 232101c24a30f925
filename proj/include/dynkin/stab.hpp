#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dynkin/hweights.hpp"
#include "dynkin/paths.hpp"

namespace dynkin {

/// A stabilized multiplicity: the common value of the path count at every
/// checked chain length, together with the threshold and probe metadata.
struct StableResult {
    Int value{0};
    int threshold_k = 1;
    std::vector<int> checked_ks;
    std::optional<int> skipped_k0;
    long long path_nodes_expanded = 0;
    std::vector<std::pair<int, long long>> timings_ms;  // (k, elapsed)
};

/// Stable tensor multiplicity of L(nu) in L(lambda) (x) L(mu) over the Z_k
/// family. Zero immediately when lambda + mu and nu are inequivalent or the
/// difference leaves the positive root cone; otherwise the count is taken at
/// 2s+1 and the next admissible chain length and must agree (s the depth).
StableResult stable_tensor(const MarkedPair& pair, const TwoSidedWeight& lambda,
                           const TwoSidedWeight& mu, const TwoSidedWeight& nu,
                           long long budget = 1'000'000);

/// Stable branching multiplicity of beta in L(lambda) under the middle
/// chain subalgebra.
StableResult stable_branching(const MarkedPair& pair, const TwoSidedWeight& lambda,
                              const TwoSidedWeight& beta, long long budget = 1'000'000);

enum class BcdFamily { B, C, D };

char family_letter(BcdFamily f);
int family_min_rank(BcdFamily f);

/// The rank-n member of the series with the standard numbering (node 1 at
/// the non-A end).
DynkinDiagram bcd_diagram(BcdFamily f, int n);

/// gamma^(n) = sum x_i w_i + sum y_i w_{n+1-i}; requires n >= ell(x)+ell(y).
Weight bcd_specialize(BcdFamily f, const TwoSidedWeight& gamma, int n);

/// Height functional of the series on the left part of gamma:
/// B: x1/2 + sum_{i>1} x_i, C: sum x_i, D: x1/2 + x2/2 + sum_{i>2} x_i.
Rat bcd_height(BcdFamily f, const TwoSidedWeight& gamma);

/// When the height vanishes, gamma specializes with a constant middle root
/// coefficient s = sum i y_i for every large rank; returns that s, or
/// nullopt for nonzero height. Verified on the rank l + r expansion.
std::optional<Int> bcd_rs_membership(BcdFamily f, const TwoSidedWeight& gamma, int l, int r);

/// Stabilized tensor multiplicity over the B/C/D series, proven only under
/// the height compatibility ht(lambda) + ht(mu) = ht(nu) (HeightMismatch
/// otherwise). Probes ranks 2s+1 and 2s+2 via the path model.
StableResult bcd_stable_tensor(BcdFamily f, const TwoSidedWeight& lambda,
                               const TwoSidedWeight& mu, const TwoSidedWeight& nu,
                               long long budget = 1'000'000);

/// Experimental probe for height-incompatible triples: reports the observed
/// counts at a few consecutive ranks without asserting anything.
std::vector<std::pair<int, long long>> bcd_observe_tensor(BcdFamily f,
                                                          const TwoSidedWeight& lambda,
                                                          const TwoSidedWeight& mu,
                                                          const TwoSidedWeight& nu, int probes = 3,
                                                          long long budget = 1'000'000);

/// Paths of shape lambda^(n) ending at beta^(n) killed by the raising
/// operators of the middle block (nodes l+1..n-r in series numbering).
long long bcd_branching_count(BcdFamily f, const TwoSidedWeight& lambda,
                              const TwoSidedWeight& beta, int n, int l, int r,
                              long long budget = 1'000'000);

}  // namespace dynkin
