#include "dynkin/hweights.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dynkin/errors.hpp"
#include "dynkin/parallel.hpp"

namespace dynkin {

bool po_geq(const MarkedPair& pair, const TwoSidedWeight& lambda1, const TwoSidedWeight& lambda2) {
    pair.require_extensible();
    TwoSidedWeight diff = lambda1 - lambda2;
    if (number_of_boxes(pair, diff) != 0) return false;
    return bici_decomposition(pair, diff).nonnegative();
}

namespace {

// Fourier-Motzkin elimination for a homogeneous system of strict
// inequalities sum_i row[i] x_i < 0. Returns a rational solution or nullopt.
std::optional<RatVec> fm_solve(std::vector<RatVec> rows, int n) {
    std::vector<std::vector<RatVec>> levels;  // constraints alive before eliminating variable v
    for (int v = n - 1; v >= 1; --v) {
        levels.push_back(rows);
        std::vector<RatVec> next;
        std::vector<const RatVec*> pos, neg;
        for (const auto& r : rows) {
            if (r[v] > 0)
                pos.push_back(&r);
            else if (r[v] < 0)
                neg.push_back(&r);
            else
                next.push_back(r);
        }
        for (const RatVec* p : pos)
            for (const RatVec* q : neg) {
                RatVec comb(v, Rat(0));
                // (*p) scaled by -q[v] plus (*q) scaled by p[v]; the x_v terms cancel
                for (int i = 0; i < v; ++i) comb[i] = (*p)[i] * (-(*q)[v]) + (*q)[i] * (*p)[v];
                next.push_back(std::move(comb));
            }
        for (auto& r : next) r.resize(v);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
    }
    // One variable left: rows are a*x_0 < 0.
    bool pos_ok = true, neg_ok = true;
    for (const auto& r : rows) {
        if (r[0] >= 0) pos_ok = false;
        if (r[0] <= 0) neg_ok = false;
    }
    if (!pos_ok && !neg_ok) return std::nullopt;
    RatVec x(n);
    x[0] = pos_ok ? 1 : -1;
    // Back-substitute through the saved levels.
    for (int v = 1; v < n; ++v) {
        const auto& constraints = levels[n - 1 - v];
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const auto& r : constraints) {
            if (r[v] == 0) continue;
            Rat rest(0);
            for (int i = 0; i < v; ++i) rest += r[i] * x[i];
            Rat bound = -rest / r[v];
            if (r[v] > 0) {  // x_v < bound
                if (!has_hi || bound < hi) hi = bound, has_hi = true;
            } else {  // x_v > bound
                if (!has_lo || bound > lo) lo = bound, has_lo = true;
            }
        }
        if (has_lo && has_hi) {
            if (lo >= hi) return std::nullopt;
            x[v] = (lo + hi) / 2;
        } else if (has_lo) {
            x[v] = lo + 1;
        } else if (has_hi) {
            x[v] = hi - 1;
        } else {
            x[v] = 0;
        }
    }
    return x;
}

IntVec normalize_positive(const RatVec& u) {
    Int lcm(1);
    for (const Rat& q : u) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec out(u.size());
    Int g(0);
    for (size_t i = 0; i < u.size(); ++i) {
        Rat scaled = u[i] * Rat(lcm);
        out[i] = to_int(scaled);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (Int& z : out) z /= g;
    return out;
}

}  // namespace

HtFunctional ht_functional(const DynkinDiagram& d) {
    if (!d.indecomposable()) throw Decomposable();
    if (d.classify() != DiagramType::Indefinite) throw NotIndefinite();
    const int n = d.node_count();

    IntMatrix ct(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) ct.at(p, q) = d.cartan_at(q, p);

    std::optional<RatVec> u;
    RatVec minus_one(n, Rat(-1));
    if (auto sol = solve_exact(ct, minus_one)) {
        bool positive = true;
        for (const Rat& q : *sol)
            if (q <= 0) positive = false;
        if (positive) u = sol;
    }
    if (!u) {
        // Strict feasibility: u_i > 0 and (C^T u)_j < 0.
        std::vector<RatVec> rows;
        for (int i = 0; i < n; ++i) {
            RatVec r(n, Rat(0));
            r[i] = -1;
            rows.push_back(std::move(r));
        }
        for (int j = 0; j < n; ++j) {
            RatVec r(n);
            for (int i = 0; i < n; ++i) r[i] = Rat(ct.at(j, i));
            rows.push_back(std::move(r));
        }
        u = fm_solve(std::move(rows), n);
        if (!u) throw NotIndefinite();
    }

    HtFunctional h;
    h.u = normalize_positive(*u);
    h.ct_u.resize(n);
    for (int j = 0; j < n; ++j) {
        Int s(0);
        for (int i = 0; i < n; ++i) s += ct.at(j, i) * h.u[i];
        h.ct_u[j] = s;
        if (s >= 0 || h.u[j] <= 0)
            throw DomainError("height functional violates its invariants (internal bug)");
    }
    return h;
}

namespace {

struct BoxScan {
    const DynkinDiagram* d;
    Weight gamma;
    HtFunctional h;
    Int H;
    std::vector<long long> bound;           // per-coordinate cap
    std::vector<RatVec> cinv;               // exact Cartan inverse
    int n = 0;

    // candidate coords `a` qualify when a - gamma lies in Q+.
    bool qualifies(const std::vector<long long>& a) const {
        RatVec x(n, Rat(0));
        for (int q = 0; q < n; ++q) {
            Rat acc(0);
            for (int p = 0; p < n; ++p)
                if (a[p] != gamma.coords[p]) acc += cinv[q][p] * rat_of(a[p] - gamma.coords[p]);
            if (!is_integral(acc) || acc < 0) return false;
        }
        return true;
    }
};

std::optional<BoxScan> prepare_scan(const DynkinDiagram& d, const Weight& gamma) {
    BoxScan s;
    s.d = &d;
    s.gamma = gamma;
    s.h = ht_functional(d);
    s.n = d.node_count();
    s.H = s.h.ht(gamma);
    if (s.H < 0) return std::nullopt;
    auto inv = invert_exact(d.cartan());
    if (!inv) throw SingularCartan();
    s.cinv = std::move(*inv);
    s.bound.resize(s.n);
    for (int p = 0; p < s.n; ++p) s.bound[p] = to_ll(Int(s.H / s.h.u[p]));
    return s;
}

// Depth-first scan over the coordinate box with the running height budget;
// exactly the set described by the finiteness proof.
void scan_rec(const BoxScan& s, int p, std::vector<long long>& a, Int used, long long& visited,
              long long budget, std::vector<Weight>& out) {
    if (++visited > budget) throw BudgetExceeded(budget);
    if (p == s.n) {
        if (s.qualifies(a)) out.push_back(Weight(a));
        return;
    }
    for (long long v = 0; v <= s.bound[p]; ++v) {
        Int next_used = used + int_of(v) * s.h.u[p];
        if (next_used > s.H) break;
        a[p] = v;
        scan_rec(s, p + 1, a, next_used, visited, budget, out);
    }
    a[p] = 0;
}

}  // namespace

std::vector<Weight> interval_up_serial(const DynkinDiagram& d, const Weight& gamma,
                                       long long budget) {
    auto s = prepare_scan(d, gamma);
    std::vector<Weight> out;
    if (!s) return out;
    std::vector<long long> a(s->n, 0);
    long long visited = 0;
    scan_rec(*s, 0, a, Int(0), visited, budget, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> interval_up_openmp(const DynkinDiagram& d, const Weight& gamma,
                                       long long budget) {
    auto s = prepare_scan(d, gamma);
    std::vector<Weight> out;
    if (!s) return out;
    const long long first_max = s->bound.empty() ? 0 : s->bound[0];
    std::vector<std::vector<Weight>> parts(first_max + 1);
    bool exceeded = false;

#pragma omp parallel for schedule(dynamic)
    for (long long v = 0; v <= first_max; ++v) {
        try {
            Int used = int_of(v) * s->h.u[0];
            if (used > s->H) continue;
            std::vector<long long> a(s->n, 0);
            a[0] = v;
            long long visited = 0;
            scan_rec(*s, 1, a, used, visited, budget, parts[v]);
        } catch (const BudgetExceeded&) {
#pragma omp critical
            exceeded = true;
        }
    }
    if (exceeded) throw BudgetExceeded(budget);
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> interval_up(const DynkinDiagram& d, const Weight& gamma, long long budget) {
    return par::kernel() == par::Kernel::OpenMP ? interval_up_openmp(d, gamma, budget)
                                                : interval_up_serial(d, gamma, budget);
}

bool is_end_marked_chain(const MarkedDiagram& md) {
    const int d = md.node_count();
    for (int p = 0; p < d; ++p) {
        int deg = 0;
        for (int q = 0; q < d; ++q) {
            if (q == p) continue;
            const Int& c = md.diagram.cartan_at(p, q);
            if (c != 0 && c != -1) return false;
            if (c != 0) ++deg;
        }
        if (deg > 2) return false;
    }
    // Walk by the numbering and confirm it is a chain ending at the mark.
    for (int j = 1; j < d; ++j) {
        int p = md.node_at(j);
        int q = md.node_at(j + 1);
        if (md.diagram.cartan_at(p, q) != -1) return false;
    }
    for (int j = 1; j + 2 <= d; ++j)
        for (int jj = j + 2; jj <= d; ++jj)
            if (md.diagram.cartan_at(md.node_at(j), md.node_at(jj)) != 0) return false;
    return true;
}

namespace {

// Multiplicity vectors z with sum_j j z_j = total.
void partitions_rec(long long total, int max_part, HVector& acc,
                    std::vector<HVector>& out) {
    if (total == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = std::min<long long>(max_part, total); part >= 1; --part) {
        acc.set(part, acc.get(part) + 1);
        partitions_rec(total - part, part, acc, out);
        acc.set(part, acc.get(part) - 1);
    }
}

std::vector<HVector> partition_vectors(long long total) {
    std::vector<HVector> out;
    HVector acc;
    if (total < 0) return out;
    partitions_rec(total, static_cast<int>(total), acc, out);
    return out;
}

}  // namespace

std::vector<TwoSidedWeight> interval_up_h2(const MarkedPair& pair, const TwoSidedWeight& gamma,
                                           long long s, long long budget) {
    pair.require_extensible();
    std::vector<TwoSidedWeight> out;
    if (s < 0) return out;

    if (is_end_marked_chain(pair.x1()) && is_end_marked_chain(pair.x2())) {
        // A-series shape: depth is the weighted sum with weights 1, 2, 3, ...
        long long t1 = s, t2 = s;
        for (int i = 1; i <= gamma.left.ell(); ++i) t1 += i * gamma.left.get(i);
        for (int i = 1; i <= gamma.right.ell(); ++i) t2 += i * gamma.right.get(i);
        for (const HVector& z : partition_vectors(t1))
            for (const HVector& w : partition_vectors(t2)) {
                TwoSidedWeight lambda(z, w);
                if (po_geq(pair, lambda, gamma)) out.push_back(lambda);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    const int lsb = gamma.ls(pair.d1()) + static_cast<int>(s);
    const int rsb = gamma.rs(pair.d2()) + static_cast<int>(s);
    int k = std::max(lsb + rsb - pair.d1() - pair.d2(), 1);
    for (;; ++k) {
        if (pair.det_zk_formula(k) == 0) continue;
        if (pair.zk(k).diagram().classify() == DiagramType::Indefinite) break;
        if (k > lsb + rsb + 8) throw NotIndefinite();
    }
    ZkDiagram zk = pair.zk(k);
    std::vector<Weight> up = interval_up(zk.diagram(), specialize(zk, gamma), budget);
    for (const Weight& tau : up) {
        bool fits = true;
        TwoSidedWeight lambda;
        for (int p = 0; p < zk.node_count() && fits; ++p) {
            if (tau[p] == 0) continue;
            if (zk.num_i(p) <= lsb)
                lambda.left.set(zk.num_i(p), tau[p]);
            else if (zk.num_ibar(p) <= rsb)
                lambda.right.set(zk.num_ibar(p), tau[p]);
            else
                fits = false;
        }
        if (!fits) continue;
        TwoSidedWeight diff = lambda - gamma;
        if (number_of_boxes(pair, diff) != 0) continue;
        if (depth(pair, diff) != int_of(s)) continue;
        if (!bici_decomposition(pair, diff).nonnegative()) continue;
        out.push_back(lambda);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Weight> interval_between_on_diagram(const DynkinDiagram& d, const Weight& lambda1,
                                                const Weight& lambda2, long long budget) {
    RootVector diff = weight_to_root_basis(d, lambda1 - lambda2);
    const int n = d.node_count();
    std::vector<long long> cap(n);
    for (int q = 0; q < n; ++q) {
        if (!is_integral(diff[q]) || diff[q] < 0) return {};
        cap[q] = to_ll(to_int(diff[q]));
    }
    std::vector<Weight> out;
    std::vector<long long> x(n, 0);
    long long visited = 0;
    // box scan over 0 <= x <= cap; beta = lambda2 + sum x_q alpha_q
    while (true) {
        if (++visited > budget) throw BudgetExceeded(budget);
        Weight beta = lambda2;
        for (int q = 0; q < n; ++q) {
            if (x[q] == 0) continue;
            for (int p = 0; p < n; ++p) beta[p] += x[q] * to_ll(d.cartan_at(p, q));
        }
        if (beta.dominant()) out.push_back(beta);
        int q = 0;
        while (q < n && x[q] == cap[q]) x[q++] = 0;
        if (q == n) break;
        ++x[q];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TwoSidedWeight> interval_between(const MarkedPair& pair, const TwoSidedWeight& lambda1,
                                             const TwoSidedWeight& lambda2, long long budget) {
    if (!po_geq(pair, lambda1, lambda2)) throw NotComparable();
    const Int smax = depth(pair, lambda1 - lambda2);
    std::vector<TwoSidedWeight> out;
    for (Int t(0); t <= smax; ++t)
        for (const TwoSidedWeight& g : interval_up_h2(pair, lambda2, to_ll(t), budget))
            if (po_geq(pair, lambda1, g)) out.push_back(g);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());

    // Specialization is a bijection onto the interval on Z_k for large k;
    // recheck membership at two chain lengths.
    int k = std::max({min_chain_length(pair, lambda1), min_chain_length(pair, lambda2), 1});
    for (const TwoSidedWeight& g : out) k = std::max(k, min_chain_length(pair, g));
    for (int probes = 0; probes < 2; ++k) {
        if (pair.det_zk_formula(k) == 0) continue;
        ++probes;
        ZkDiagram zk = pair.zk(k);
        std::vector<Weight> direct = interval_between_on_diagram(
            zk.diagram(), specialize(zk, lambda1), specialize(zk, lambda2), budget);
        std::vector<Weight> image;
        image.reserve(out.size());
        for (const TwoSidedWeight& g : out) image.push_back(specialize(zk, g));
        std::sort(image.begin(), image.end());
        if (direct != image)
            throw DomainError("interval does not match its specialization (internal bug)");
    }
    return out;
}

}  // namespace dynkin
