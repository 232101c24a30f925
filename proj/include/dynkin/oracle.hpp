#pragma once

#include <map>
#include <vector>

#include "dynkin/lattice.hpp"

namespace dynkin {

/// Finite-type machinery: positive roots, the invariant form, rho. Used as
/// the character-theoretic oracle against the path model.
class WeylContext {
  public:
    explicit WeylContext(DynkinDiagram d);

    const DynkinDiagram& diagram() const { return d_; }
    int rank() const { return d_.node_count(); }
    const Weight& rho() const { return rho_; }
    /// Positive roots as integer simple-root coordinates.
    const std::vector<std::vector<long long>>& positive_roots() const { return pos_roots_; }

    /// Invariant form, normalized so (alpha_p | alpha_p) = 2 d_p.
    Rat form(const Weight& a, const Weight& b) const;
    /// (a | alpha) with alpha given in root coordinates.
    Rat form_with_root(const Weight& a, const std::vector<long long>& alpha) const;

    /// Coroot coordinates of alpha (the Cartan matrix column combination).
    Weight root_as_weight(const std::vector<long long>& alpha) const;

    /// Reflects w into the dominant chamber; parity = number of reflections
    /// mod 2 (well defined on regular orbits). Returns false when the weight
    /// hits a wall (some coordinate zero after reflection).
    bool to_dominant(Weight& w, int& parity) const;

    /// The dominant Weyl-orbit representative (walls allowed).
    Weight dominant_rep(Weight w) const;

  private:
    DynkinDiagram d_;
    Weight rho_;
    std::vector<std::vector<long long>> pos_roots_;
    std::vector<RatVec> cinv_;
};

/// All weight multiplicities of the irreducible L(lambda) by the Freudenthal
/// recursion. Keys include the full Weyl orbits.
std::map<Weight, Int> freudenthal(const WeylContext& ctx, const Weight& lambda);

/// Multiplicities restricted to dominant weights.
std::map<Weight, Int> freudenthal_dominant(const WeylContext& ctx, const Weight& lambda);

/// Decomposition of L(lambda) (x) L(mu) into irreducibles by the signed
/// dominant-chamber reflection rule applied to the weights of L(lambda).
std::map<Weight, Int> tensor_decompose(const WeylContext& ctx, const Weight& lambda,
                                       const Weight& mu);

std::map<Weight, Int> tensor_decompose_serial(const WeylContext& ctx, const Weight& lambda,
                                              const Weight& mu);
std::map<Weight, Int> tensor_decompose_openmp(const WeylContext& ctx, const Weight& lambda,
                                              const Weight& mu);

/// Weyl dimension formula.
Int dimension(const WeylContext& ctx, const Weight& lambda);

/// Multiplicity of the highest weight beta for the Levi subalgebra spanned
/// by the given nodes, inside L(lambda): the alternating sum of weight
/// multiplicities over the sub-Weyl orbit. beta must be dominant on the
/// subdiagram.
Int levi_branching(const WeylContext& ctx, const Weight& lambda, const std::vector<int>& nodes,
                   const Weight& beta);

}  // namespace dynkin
