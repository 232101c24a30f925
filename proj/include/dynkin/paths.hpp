#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynkin/lattice.hpp"

namespace dynkin {

/// Piecewise linear path from 0 in weight space, stored as exact breakpoint
/// values in coroot coordinates. Paths are kept in canonical form: maximal
/// straight stretches (no pauses, no consecutive positively-proportional
/// increments), parametrized with equal durations. The root operators
/// commute with reparametrization, so the canonical representative stands
/// for its class and path equality is plain equality of breakpoint lists.
struct Path {
    std::vector<RatVec> values;  // breakpoint i sits at time i/segments()

    int segments() const { return static_cast<int>(values.size()) - 1; }
    int dim() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
    const RatVec& endpoint() const { return values.back(); }

    /// Endpoint as an integral weight; throws when not integral.
    Weight endpoint_weight() const;

    bool operator==(const Path& o) const;
    bool operator<(const Path& o) const;
};

/// t lambda; the canonical single-segment path (a point when lambda = 0).
Path straight_path(const Weight& lambda);

/// Canonical form of a path given by arbitrary breakpoints (times strictly
/// increasing from 0 to 1, values[0] = 0).
Path canonicalize_path(const std::vector<Rat>& times, const std::vector<RatVec>& values);

/// Exact (t, pi(t)(coroot_p)) profile at the canonical breakpoints.
std::vector<std::pair<Rat, Rat>> eval_coroot_profile(const Path& pi, int p);

/// Minimum of the coroot-p profile.
Rat min_coroot_value(const Path& pi, int p);

/// Lowering and raising root operators; nullopt encodes the zero of the
/// path algebra.
std::optional<Path> f_op(const DynkinDiagram& d, const Path& pi, int p);
std::optional<Path> e_op(const DynkinDiagram& d, const Path& pi, int p);

/// Whether e_p kills the path (no raising possible at p).
bool e_op_is_null(const Path& pi, int p);

/// A path reached from the straight path by the recorded word of lowering
/// operators; counts[p] = occurrences of p in the word.
struct CrystalNode {
    Path path;
    std::vector<int> word;
    std::vector<int> counts;
};

struct CrystalGraph {
    std::vector<CrystalNode> nodes;                 // BFS order, node 0 = straight path
    std::vector<std::array<int, 3>> edges;          // {from, operator node, to}
    std::vector<int> level_offsets;                 // nodes index where each level starts
    long long expanded = 0;                         // f-op applications performed
};

struct GenerateOptions {
    long long budget = 1'000'000;
    int max_depth = -1;  // -1: run until the frontier empties (finite type)
    // Nodes failing the filter are dropped and not expanded further.
    std::function<bool(const CrystalNode&)> keep;
};

/// Breadth-first generation of the lowering-operator orbit of the straight
/// path, deduplicated by canonical path equality (the first word in
/// lexicographic order is kept). Deterministic for both kernels.
CrystalGraph generate_crystal(const DynkinDiagram& d, const Weight& lambda,
                              const GenerateOptions& opt);
CrystalGraph generate_crystal_serial(const DynkinDiagram& d, const Weight& lambda,
                                     const GenerateOptions& opt);
CrystalGraph generate_crystal_openmp(const DynkinDiagram& d, const Weight& lambda,
                                     const GenerateOptions& opt);

struct LSPath {
    Path path;
    Weight shape;
    std::vector<int> word;
};

/// All LS paths of shape lambda with endpoint beta. Throws NotInRootCone
/// when lambda - beta has non-integral root coordinates; empty when some
/// coordinate is negative. expanded, when given, accumulates the number of
/// operator applications performed.
std::vector<LSPath> generate_paths_to(const DynkinDiagram& d, const Weight& lambda,
                                      const Weight& beta, long long budget = 1'000'000,
                                      long long* expanded = nullptr);

/// Number of LS paths of shape lambda ending at nu - mu that stay dominant
/// after shifting by mu. This is the multiplicity of L(nu) in
/// L(lambda) (x) L(mu). Returns 0 when nu - mu is unreachable.
long long tensor_count(const DynkinDiagram& d, const Weight& lambda, const Weight& mu,
                       const Weight& nu, long long budget = 1'000'000,
                       long long* expanded = nullptr);

/// Full decomposition of L(lambda) (x) L(mu) by one crystal generation
/// (finite-type diagrams: the crystal is exhausted). Values are the tensor
/// multiplicities keyed by the dominant highest weight.
std::map<Weight, long long> tensor_decompose_paths(const DynkinDiagram& d, const Weight& lambda,
                                                   const Weight& mu, long long budget = 2'000'000);

/// Paths of shape lambda^(k) ending at beta^(k) killed by every raising
/// operator of the middle chain.
long long branching_count(const ZkDiagram& zk, const TwoSidedWeight& lambda,
                          const TwoSidedWeight& beta, long long budget = 1'000'000,
                          long long* expanded = nullptr);

/// Reinterprets a path supported off the inner middle of Z_k over Z_k'.
/// Throws NotSupported when the path touches chain positions s+1..k-s.
Path phi_transport(const ZkDiagram& from, const ZkDiagram& to, int s, const Path& pi);

/// GraphViz rendering of a generated crystal (nodes named by their words,
/// edges labeled by the operator node, 1-based).
std::string crystal_dot(const DynkinDiagram& d, const CrystalGraph& g);

}  // namespace dynkin
