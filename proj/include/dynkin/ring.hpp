#pragma once

#include <map>

#include "dynkin/stab.hpp"

namespace dynkin {

/// Finitely supported rational combination of basis vectors v_lambda,
/// lambda dominant two-sided. Products are computed up to a depth
/// truncation; depth_bound records the level of the computation that
/// produced the element.
struct RingElement {
    std::map<TwoSidedWeight, Rat> terms;
    long long depth_bound = 0;

    static RingElement basis(const TwoSidedWeight& lambda, long long depth_bound = 0) {
        RingElement e;
        e.depth_bound = depth_bound;
        e.terms[lambda] = 1;
        return e;
    }

    void add_term(const TwoSidedWeight& w, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    bool operator==(const RingElement& o) const { return terms == o.terms; }
};

/// v_lambda * v_mu truncated to output depth <= depth_bound: the sum of
/// stable tensor multiplicities over the candidate highest weights found as
/// path endpoints at one sufficiently long chain (verified at the next).
RingElement star_basis(const MarkedPair& pair, const TwoSidedWeight& lambda,
                       const TwoSidedWeight& mu, long long depth_bound,
                       long long budget = 2'000'000);

/// Bilinear extension of star_basis.
RingElement star(const MarkedPair& pair, const RingElement& xi, const RingElement& eta,
                 long long depth_bound, long long budget = 2'000'000);

/// Compares (v_l * v_m) * v_n and v_l * (v_m * v_n) on the depth <=
/// depth_bound sub-support, where the truncation loses nothing.
bool associativity_check(const MarkedPair& pair, const TwoSidedWeight& lambda,
                         const TwoSidedWeight& mu, const TwoSidedWeight& nu,
                         long long depth_bound, long long budget = 2'000'000);

/// Multiplicity of L(gamma^(k)) in the triple tensor product at one large k,
/// summed over intermediate highest weights by two path counts. Used as the
/// independent route for the associativity identity.
Int triple_product_direct(const MarkedPair& pair, const TwoSidedWeight& lambda,
                          const TwoSidedWeight& mu, const TwoSidedWeight& nu,
                          const TwoSidedWeight& gamma, long long budget = 2'000'000);

/// Depth of lambda + mu - nu relative to the product inputs; the per-term
/// annotation of star results.
Int term_depth(const MarkedPair& pair, const TwoSidedWeight& lambda_plus_mu,
               const TwoSidedWeight& nu);

}  // namespace dynkin
