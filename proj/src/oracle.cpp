#include "dynkin/oracle.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dynkin/errors.hpp"
#include "dynkin/parallel.hpp"

namespace dynkin {

WeylContext::WeylContext(DynkinDiagram d) : d_(std::move(d)) {
    if (d_.classify() != DiagramType::Finite) throw NotFiniteType();
    const int n = d_.node_count();
    rho_ = Weight(std::vector<long long>(n, 1));
    auto inv = invert_exact(d_.cartan());
    if (!inv) throw SingularCartan();
    cinv_ = std::move(*inv);

    // Positive roots: closure of the simple roots under simple reflections.
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> frontier;
    for (int q = 0; q < n; ++q) {
        std::vector<long long> e(n, 0);
        e[q] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& r : frontier) {
            for (int p = 0; p < n; ++p) {
                long long pairing = 0;
                for (int q = 0; q < n; ++q) pairing += to_ll(d_.cartan_at(p, q)) * r[q];
                std::vector<long long> img = r;
                img[p] -= pairing;
                bool positive = true;
                for (long long c : img)
                    if (c < 0) positive = false;
                if (positive && seen.insert(img).second) next.push_back(std::move(img));
            }
        }
        frontier = std::move(next);
        if (seen.size() > 100000) throw NotFiniteType();
    }
    pos_roots_.assign(seen.begin(), seen.end());
}

Rat WeylContext::form(const Weight& a, const Weight& b) const {
    // (a|b) = a^T D C^{-1} b in coroot coordinates
    const int n = rank();
    Rat s(0);
    for (int q = 0; q < n; ++q) {
        Rat m(0);
        for (int p = 0; p < n; ++p)
            if (b[p] != 0) m += cinv_[q][p] * rat_of(b[p]);
        if (a[q] != 0 || m != 0) s += Rat(d_.symmetrizer()[q]) * rat_of(a[q]) * m;
    }
    return s;
}

Rat WeylContext::form_with_root(const Weight& a, const std::vector<long long>& alpha) const {
    Rat s(0);
    for (int q = 0; q < rank(); ++q)
        if (alpha[q] != 0 && a[q] != 0) s += Rat(d_.symmetrizer()[q] * int_of(alpha[q]) * int_of(a[q]));
    return s;
}

Weight WeylContext::root_as_weight(const std::vector<long long>& alpha) const {
    const int n = rank();
    Weight w(n);
    for (int p = 0; p < n; ++p) {
        long long acc = 0;
        for (int q = 0; q < n; ++q) acc += to_ll(d_.cartan_at(p, q)) * alpha[q];
        w[p] = acc;
    }
    return w;
}

bool WeylContext::to_dominant(Weight& w, int& parity) const {
    const int n = rank();
    for (int guard = 0; guard < 1000000; ++guard) {
        int neg = -1;
        for (int p = 0; p < n; ++p)
            if (w[p] < 0) { neg = p; break; }
        if (neg < 0) {
            for (int p = 0; p < n; ++p)
                if (w[p] == 0) return false;
            return true;
        }
        // s_p: w -= w[p] * column p of the Cartan matrix
        const long long c = w[neg];
        for (int q = 0; q < n; ++q) w[q] -= c * to_ll(d_.cartan_at(q, neg));
        parity ^= 1;
    }
    throw NotFiniteType();
}

Weight WeylContext::dominant_rep(Weight w) const {
    int parity = 0;
    to_dominant(w, parity);
    return w;
}

namespace {

// Dominant weights mu with lambda - mu in Q+, found by descending through
// the (possibly non-dominant) weight candidates with |mu| <= |lambda|.
std::vector<Weight> dominant_candidates(const WeylContext& ctx, const Weight& lambda) {
    const int n = ctx.rank();
    const Rat lam_norm = ctx.form(lambda, lambda);
    std::set<Weight> seen{lambda};
    std::vector<Weight> frontier{lambda}, dominants;
    if (lambda.dominant()) dominants.push_back(lambda);
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier) {
            for (int q = 0; q < n; ++q) {
                Weight v = w;
                for (int p = 0; p < n; ++p) v[p] -= to_ll(ctx.diagram().cartan_at(p, q));
                if (ctx.form(v, v) > lam_norm) continue;
                if (!seen.insert(v).second) continue;
                if (v.dominant()) dominants.push_back(v);
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return dominants;
}

// Height of lambda - mu in the root basis (known integral here).
Int drop_height(const WeylContext& ctx, const Weight& lambda, const Weight& mu) {
    RootVector x = weight_to_root_basis(ctx.diagram(), lambda - mu);
    Int h(0);
    for (const Rat& q : x) h += to_int(q);
    return h;
}

}  // namespace

std::map<Weight, Int> freudenthal_dominant(const WeylContext& ctx, const Weight& lambda) {
    if (!lambda.dominant()) throw DomainError("freudenthal requires a dominant weight");
    std::vector<Weight> doms = dominant_candidates(ctx, lambda);
    std::sort(doms.begin(), doms.end(), [&](const Weight& a, const Weight& b) {
        return drop_height(ctx, lambda, a) < drop_height(ctx, lambda, b);
    });

    std::map<Weight, Int> mult;
    const Weight lam_rho = lambda + ctx.rho();
    const Rat top = ctx.form(lam_rho, lam_rho);
    for (const Weight& mu : doms) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        RootVector drop = weight_to_root_basis(ctx.diagram(), lambda - mu);
        Rat numer(0);
        for (const auto& alpha : ctx.positive_roots()) {
            Weight alpha_w = ctx.root_as_weight(alpha);
            // walk mu + j*alpha while it stays under lambda
            std::vector<Rat> rem(drop);
            Weight nu = mu;
            for (int j = 1;; ++j) {
                bool inside = true;
                for (int q = 0; q < ctx.rank(); ++q) {
                    rem[q] -= rat_of(alpha[q]);
                    if (rem[q] < 0) inside = false;
                }
                if (!inside) break;
                for (int p = 0; p < ctx.rank(); ++p) nu[p] += alpha_w[p];
                // multiplicities are Weyl invariant; look up the dominant rep
                auto it = mult.find(ctx.dominant_rep(nu));
                if (it == mult.end()) continue;
                numer += Rat(it->second) * ctx.form_with_root(nu, alpha);
            }
        }
        numer *= 2;
        Weight mu_rho = mu + ctx.rho();
        Rat denom = top - ctx.form(mu_rho, mu_rho);
        if (denom == 0) throw DomainError("freudenthal denominator vanished (internal bug)");
        Rat value = numer / denom;
        if (!is_integral(value) || value < 0)
            throw DomainError("freudenthal produced a non-integer (internal bug)");
        if (value != 0) mult[mu] = to_int(value);
    }
    return mult;
}

std::map<Weight, Int> freudenthal(const WeylContext& ctx, const Weight& lambda) {
    std::map<Weight, Int> dom = freudenthal_dominant(ctx, lambda);
    std::map<Weight, Int> full;
    const int n = ctx.rank();
    for (const auto& [mu, m] : dom) {
        // Weyl orbit of mu by reflection closure.
        std::set<Weight> orbit{mu};
        std::vector<Weight> frontier{mu};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const Weight& w : frontier)
                for (int p = 0; p < n; ++p) {
                    if (w[p] == 0) continue;
                    Weight v = w;
                    const long long c = w[p];
                    for (int q = 0; q < n; ++q) v[q] -= c * to_ll(ctx.diagram().cartan_at(q, p));
                    if (orbit.insert(v).second) next.push_back(std::move(v));
                }
            frontier = std::move(next);
        }
        for (const Weight& w : orbit) full[w] = m;
    }
    return full;
}

namespace {

std::map<Weight, Int> klimyk_accumulate(const WeylContext& ctx,
                                        const std::vector<std::pair<Weight, Int>>& weights,
                                        const Weight& mu, size_t begin, size_t end) {
    std::map<Weight, Int> acc;
    const Weight shift = mu + ctx.rho();
    for (size_t i = begin; i < end; ++i) {
        Weight psi = weights[i].first + shift;
        int parity = 0;
        if (!ctx.to_dominant(psi, parity)) continue;  // wall: cancels
        Weight nu = psi - ctx.rho();
        Int contrib = parity ? -weights[i].second : weights[i].second;
        auto [it, inserted] = acc.emplace(std::move(nu), contrib);
        if (!inserted) it->second += contrib;
    }
    return acc;
}

std::map<Weight, Int> klimyk_finish(std::map<Weight, Int> acc) {
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second == 0) {
            it = acc.erase(it);
            continue;
        }
        if (it->second < 0) throw DomainError("negative tensor multiplicity (internal bug)");
        ++it;
    }
    return acc;
}

std::vector<std::pair<Weight, Int>> weight_list(const WeylContext& ctx, const Weight& lambda) {
    auto wmap = freudenthal(ctx, lambda);
    return {wmap.begin(), wmap.end()};
}

}  // namespace

std::map<Weight, Int> tensor_decompose_serial(const WeylContext& ctx, const Weight& lambda,
                                              const Weight& mu) {
    auto weights = weight_list(ctx, lambda);
    return klimyk_finish(klimyk_accumulate(ctx, weights, mu, 0, weights.size()));
}

std::map<Weight, Int> tensor_decompose_openmp(const WeylContext& ctx, const Weight& lambda,
                                              const Weight& mu) {
    auto weights = weight_list(ctx, lambda);
    const int workers = std::max(1, par::jobs());
    std::vector<std::map<Weight, Int>> parts(workers);
#pragma omp parallel for schedule(static)
    for (int t = 0; t < workers; ++t) {
        size_t begin = weights.size() * t / workers;
        size_t end = weights.size() * (t + 1) / workers;
        parts[t] = klimyk_accumulate(ctx, weights, mu, begin, end);
    }
    std::map<Weight, Int> acc;
    for (auto& part : parts)
        for (auto& [nu, m] : part) {
            auto [it, inserted] = acc.emplace(nu, m);
            if (!inserted) it->second += m;
        }
    return klimyk_finish(std::move(acc));
}

std::map<Weight, Int> tensor_decompose(const WeylContext& ctx, const Weight& lambda,
                                       const Weight& mu) {
    if (!lambda.dominant() || !mu.dominant())
        throw DomainError("tensor_decompose requires dominant weights");
    return par::kernel() == par::Kernel::OpenMP ? tensor_decompose_openmp(ctx, lambda, mu)
                                                : tensor_decompose_serial(ctx, lambda, mu);
}

Int dimension(const WeylContext& ctx, const Weight& lambda) {
    if (!lambda.dominant()) throw DomainError("dimension requires a dominant weight");
    Rat prod(1);
    const Weight lr = lambda + ctx.rho();
    for (const auto& alpha : ctx.positive_roots())
        prod *= ctx.form_with_root(lr, alpha) / ctx.form_with_root(ctx.rho(), alpha);
    if (!is_integral(prod)) throw DomainError("non-integral dimension (internal bug)");
    return to_int(prod);
}

Int levi_branching(const WeylContext& ctx, const Weight& lambda, const std::vector<int>& nodes,
                   const Weight& beta) {
    const int n = ctx.rank();
    for (int p : nodes)
        if (beta[p] < 0) throw DomainError("levi_branching requires beta dominant on the subdiagram");
    auto mult = freudenthal(ctx, lambda);

    // rho of the subalgebra, extended by zero outside it.
    Weight rho_s(n);
    for (int p : nodes) rho_s[p] = 1;
    Weight psi = beta + rho_s;

    // Orbit of psi under the sub-Weyl group with parities; psi is regular
    // for the subgroup, so the parity per orbit point is well defined.
    std::map<Weight, int> orbit{{psi, 0}};
    std::vector<Weight> frontier{psi};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier) {
            int par = orbit[w];
            for (int p : nodes) {
                Weight v = w;
                const long long c = w[p];
                for (int q = 0; q < n; ++q) v[q] -= c * to_ll(ctx.diagram().cartan_at(q, p));
                if (orbit.emplace(v, par ^ 1).second) next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    Int total(0);
    for (const auto& [v, par] : orbit) {
        Weight w = v - rho_s;
        auto it = mult.find(w);
        if (it == mult.end()) continue;
        total += par ? -it->second : it->second;
    }
    if (total < 0) throw DomainError("negative branching multiplicity (internal bug)");
    return total;
}

}  // namespace dynkin
