#include "dynkin/paths.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dynkin/errors.hpp"
#include "dynkin/parallel.hpp"

namespace dynkin {

namespace {

int cmp_vec(const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return static_cast<int>(a.size()) - static_cast<int>(b.size());
}

bool positively_proportional(const RatVec& a, const RatVec& b) {
    // both nonzero; true when b = c*a with c > 0
    size_t lead = a.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        if (lead == a.size() && a[i] != 0) lead = i;
    }
    if (lead == a.size()) return false;
    if (sgn(a[lead]) != sgn(b[lead])) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[lead] * b[i] != a[i] * b[lead]) return false;
    return true;
}

}  // namespace

bool Path::operator==(const Path& o) const {
    if (values.size() != o.values.size()) return false;
    for (size_t i = 0; i < values.size(); ++i)
        if (cmp_vec(values[i], o.values[i]) != 0) return false;
    return true;
}

bool Path::operator<(const Path& o) const {
    for (size_t i = 0; i < values.size() && i < o.values.size(); ++i) {
        int c = cmp_vec(values[i], o.values[i]);
        if (c != 0) return c < 0;
    }
    return values.size() < o.values.size();
}

Weight Path::endpoint_weight() const {
    const RatVec& e = endpoint();
    Weight w(static_cast<int>(e.size()));
    for (size_t p = 0; p < e.size(); ++p) {
        if (!is_integral(e[p])) throw DomainError("path endpoint is not an integral weight");
        w[static_cast<int>(p)] = to_ll(to_int(e[p]));
    }
    return w;
}

Path straight_path(const Weight& lambda) {
    Path pi;
    const int n = lambda.size();
    pi.values.emplace_back(n, Rat(0));
    if (!lambda.is_zero()) {
        RatVec end(n);
        for (int p = 0; p < n; ++p) end[p] = rat_of(lambda[p]);
        pi.values.push_back(std::move(end));
    }
    return pi;
}

Path canonicalize_path(const std::vector<Rat>& times, const std::vector<RatVec>& values) {
    const size_t m = times.size();
    if (m == 0 || m != values.size()) throw std::logic_error("canonicalize_path: bad breakpoints");
    std::vector<RatVec> incs;
    for (size_t i = 0; i + 1 < m; ++i) {
        if (times[i + 1] <= times[i]) throw std::logic_error("canonicalize_path: times not increasing");
        RatVec w(values[i].size());
        bool zero = true;
        for (size_t q = 0; q < w.size(); ++q) {
            w[q] = values[i + 1][q] - values[i][q];
            if (w[q] != 0) zero = false;
        }
        if (zero) continue;  // pause: removed by reparametrization
        if (!incs.empty() && positively_proportional(incs.back(), w)) {
            for (size_t q = 0; q < w.size(); ++q) incs.back()[q] += w[q];
        } else {
            incs.push_back(std::move(w));
        }
    }
    Path out;
    out.values.emplace_back(values[0].size(), Rat(0));
    for (const RatVec& w : incs) {
        RatVec next = out.values.back();
        for (size_t q = 0; q < w.size(); ++q) next[q] += w[q];
        out.values.push_back(std::move(next));
    }
    return out;
}

std::vector<std::pair<Rat, Rat>> eval_coroot_profile(const Path& pi, int p) {
    std::vector<std::pair<Rat, Rat>> out;
    const int m = std::max(pi.segments(), 1);
    for (size_t i = 0; i < pi.values.size(); ++i)
        out.emplace_back(Rat(static_cast<long>(i), static_cast<long>(m)), pi.values[i][p]);
    return out;
}

Rat min_coroot_value(const Path& pi, int p) {
    Rat m = pi.values[0][p];
    for (const RatVec& v : pi.values)
        if (v[p] < m) m = v[p];
    return m;
}

namespace {

// Piecewise linear function by breakpoints; times strictly increasing.
struct PL {
    std::vector<Rat> t, y;

    Rat eval(const Rat& tau) const {
        size_t i = 0;
        while (i + 1 < t.size() && t[i + 1] < tau) ++i;
        if (tau <= t[i]) return y[i];
        if (i + 1 == t.size()) return y.back();
        return y[i] + (y[i + 1] - y[i]) * (tau - t[i]) / (t[i + 1] - t[i]);
    }
};

PL path_profile(const Path& pi, int p) {
    PL g;
    const int m = pi.segments();
    for (int i = 0; i <= m; ++i) {
        g.t.emplace_back(static_cast<long>(i), static_cast<long>(std::max(m, 1)));
        g.y.push_back(pi.values[i][p]);
    }
    return g;
}

// min over [t, 1] of g; nondecreasing in t.
PL suffix_min(const PL& g) {
    const size_t m = g.t.size() - 1;
    std::vector<Rat> ts, ys;
    ts.push_back(g.t[m]);
    ys.push_back(g.y[m]);
    Rat H = g.y[m];
    for (size_t i = m; i-- > 0;) {
        const Rat &y0 = g.y[i], &y1 = g.y[i + 1];
        if (y0 >= H) {
            // g never dips below the future minimum here
            ts.push_back(g.t[i]);
            ys.push_back(H);
        } else if (y0 <= y1) {
            // rising segment crossing the level H
            Rat tstar = g.t[i] + (H - y0) / (y1 - y0) * (g.t[i + 1] - g.t[i]);
            if (tstar < g.t[i + 1]) {
                ts.push_back(tstar);
                ys.push_back(H);
            }
            ts.push_back(g.t[i]);
            ys.push_back(y0);
            H = y0;
        } else {
            // falling segment: minimum sits at the right end
            if (y1 < H) H = y1;  // cannot happen (H <= y1 by construction)
            ts.push_back(g.t[i]);
            ys.push_back(H);
        }
    }
    PL h;
    for (size_t i = ts.size(); i-- > 0;) {
        if (!h.t.empty() && h.t.back() == ts[i]) continue;
        h.t.push_back(ts[i]);
        h.y.push_back(ys[i]);
    }
    return h;
}

// min over [0, t] of g; nonincreasing in t.
PL prefix_min(const PL& g) {
    PL h;
    h.t.push_back(g.t[0]);
    h.y.push_back(g.y[0]);
    Rat H = g.y[0];
    for (size_t i = 0; i + 1 < g.t.size(); ++i) {
        const Rat &y0 = g.y[i], &y1 = g.y[i + 1];
        if (y1 >= H) {
            h.t.push_back(g.t[i + 1]);
            h.y.push_back(H);
        } else if (y0 > H) {
            // falls through the running minimum inside the segment
            Rat tstar = g.t[i] + (y0 - H) / (y0 - y1) * (g.t[i + 1] - g.t[i]);
            if (tstar > g.t[i]) {
                h.t.push_back(tstar);
                h.y.push_back(H);
            }
            h.t.push_back(g.t[i + 1]);
            h.y.push_back(y1);
            H = y1;
        } else {
            // y0 == H and strictly falling
            h.t.push_back(g.t[i + 1]);
            h.y.push_back(y1);
            H = y1;
        }
    }
    return h;
}

// min(cap, f) for nondecreasing f; keeps piecewise linearity exact.
PL clip_above(const PL& f, const Rat& cap) {
    PL out;
    for (size_t i = 0; i < f.t.size(); ++i) {
        if (f.y[i] <= cap) {
            out.t.push_back(f.t[i]);
            out.y.push_back(f.y[i]);
            continue;
        }
        // first point above the cap: insert the crossing, then stay flat
        if (i == 0) {
            out.t.push_back(f.t[0]);
            out.y.push_back(cap);
        } else if (f.y[i - 1] < cap) {
            Rat tstar = f.t[i - 1] + (cap - f.y[i - 1]) / (f.y[i] - f.y[i - 1]) * (f.t[i] - f.t[i - 1]);
            out.t.push_back(tstar);
            out.y.push_back(cap);
        }
        out.t.push_back(f.t.back());
        out.y.push_back(cap);
        break;
    }
    return out;
}

// max(0, floor - f) for nonincreasing f (yields a nondecreasing result).
PL raise_amount(const PL& f, const Rat& one) {
    PL out;
    bool started = false;
    for (size_t i = 0; i < f.t.size(); ++i) {
        Rat v = one - f.y[i];
        if (v <= 0) {
            if (i + 1 < f.t.size() && one - f.y[i + 1] > 0) {
                // crossing inside the next segment
                Rat tstar =
                    f.t[i] + (f.y[i] - one) / (f.y[i] - f.y[i + 1]) * (f.t[i + 1] - f.t[i]);
                if (!started) {
                    out.t.push_back(f.t[0]);
                    out.y.push_back(Rat(0));
                    started = true;
                }
                if (tstar > out.t.back()) {
                    out.t.push_back(tstar);
                    out.y.push_back(Rat(0));
                }
            } else if (!started) {
                out.t.push_back(f.t[i]);
                out.y.push_back(Rat(0));
                started = true;
            } else if (i + 1 == f.t.size()) {
                if (f.t[i] > out.t.back()) {
                    out.t.push_back(f.t[i]);
                    out.y.push_back(Rat(0));
                }
            }
        } else {
            if (!started) {
                out.t.push_back(f.t[i]);
                out.y.push_back(v);
                started = true;
            } else {
                out.t.push_back(f.t[i]);
                out.y.push_back(v);
            }
        }
    }
    return out;
}

Path apply_shift(const Path& pi, const PL& amount, const RatVec& alpha_coords, int direction) {
    const int m = pi.segments();
    std::vector<Rat> times;
    for (int i = 0; i <= m; ++i) times.emplace_back(static_cast<long>(i), static_cast<long>(m));
    for (const Rat& t : amount.t) times.push_back(t);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    PL track;  // reuse eval on the original path per coordinate via lerp below
    std::vector<RatVec> vals;
    vals.reserve(times.size());
    for (const Rat& tau : times) {
        // interpolate pi at tau
        Rat pos = tau * m;
        long idx = to_ll(floor_rat(pos));
        if (idx >= m) idx = m - 1;
        Rat frac = pos - Rat(idx);
        RatVec v(pi.values[0].size());
        for (size_t q = 0; q < v.size(); ++q)
            v[q] = pi.values[idx][q] + (pi.values[idx + 1][q] - pi.values[idx][q]) * frac;
        Rat amt = amount.eval(tau);
        for (size_t q = 0; q < v.size(); ++q) v[q] += Rat(direction) * amt * alpha_coords[q];
        vals.push_back(std::move(v));
    }
    return canonicalize_path(times, vals);
}

RatVec alpha_coroot_coords(const DynkinDiagram& d, int p) {
    RatVec a(d.node_count());
    for (int r = 0; r < d.node_count(); ++r) a[r] = Rat(d.cartan_at(r, p));
    return a;
}

}  // namespace

std::optional<Path> f_op(const DynkinDiagram& d, const Path& pi, int p) {
    if (pi.segments() == 0) return std::nullopt;
    PL g = path_profile(pi, p);
    Rat mp = g.y[0];
    for (const Rat& y : g.y)
        if (y < mp) mp = y;
    for (Rat& y : g.y) y -= mp;
    if (g.y.back() < 1) return std::nullopt;  // a(1) < 1
    PL a = clip_above(suffix_min(g), Rat(1));
    return apply_shift(pi, a, alpha_coroot_coords(d, p), -1);
}

bool e_op_is_null(const Path& pi, int p) {
    return min_coroot_value(pi, p) > -1;
}

std::optional<Path> e_op(const DynkinDiagram& d, const Path& pi, int p) {
    if (pi.segments() == 0) return std::nullopt;
    if (e_op_is_null(pi, p)) return std::nullopt;
    PL g = path_profile(pi, p);
    Rat mp = g.y[0];
    for (const Rat& y : g.y)
        if (y < mp) mp = y;
    for (Rat& y : g.y) y -= mp;
    PL b = raise_amount(prefix_min(g), Rat(1));
    return apply_shift(pi, b, alpha_coroot_coords(d, p), +1);
}

namespace {

struct Candidate {
    Path path;
    int parent;
    int op;
};

bool candidate_less(const Candidate& a, const Candidate& b,
                    const std::vector<CrystalNode>& nodes) {
    if (a.path < b.path) return true;
    if (b.path < a.path) return false;
    const auto& wa = nodes[a.parent].word;
    const auto& wb = nodes[b.parent].word;
    std::vector<int> fa(wa);
    fa.push_back(a.op);
    std::vector<int> fb(wb);
    fb.push_back(b.op);
    return fa < fb;
}

template <typename Expand>
CrystalGraph generate_impl(const DynkinDiagram& d, const Weight& lambda,
                           const GenerateOptions& opt, Expand expand) {
    CrystalGraph g;
    CrystalNode root{straight_path(lambda), {}, std::vector<int>(d.node_count(), 0)};
    if (opt.keep && !opt.keep(root)) return g;
    g.nodes.push_back(std::move(root));
    g.level_offsets.push_back(0);

    std::vector<int> frontier{0};
    int depth = 0;
    while (!frontier.empty() && (opt.max_depth < 0 || depth < opt.max_depth)) {
        std::vector<Candidate> cand = expand(d, g, frontier);
        g.expanded += static_cast<long long>(frontier.size()) * d.node_count();
        if (g.expanded > opt.budget) throw BudgetExceeded(opt.budget);

        std::sort(cand.begin(), cand.end(),
                  [&](const Candidate& a, const Candidate& b) { return candidate_less(a, b, g.nodes); });
        std::vector<int> next;
        g.level_offsets.push_back(static_cast<int>(g.nodes.size()));
        size_t i = 0;
        while (i < cand.size()) {
            size_t j = i;
            while (j < cand.size() && cand[j].path == cand[i].path) ++j;
            CrystalNode node;
            node.path = cand[i].path;
            node.word = g.nodes[cand[i].parent].word;
            node.word.push_back(cand[i].op);
            node.counts = g.nodes[cand[i].parent].counts;
            node.counts[cand[i].op]++;
            if (!opt.keep || opt.keep(node)) {
                int idx = static_cast<int>(g.nodes.size());
                g.nodes.push_back(std::move(node));
                next.push_back(idx);
                for (size_t e = i; e < j; ++e) g.edges.push_back({cand[e].parent, cand[e].op, idx});
            }
            i = j;
        }
        frontier = std::move(next);
        ++depth;
    }
    return g;
}

std::vector<Candidate> expand_serial(const DynkinDiagram& d, const CrystalGraph& g,
                                     const std::vector<int>& frontier) {
    std::vector<Candidate> cand;
    for (int idx : frontier)
        for (int p = 0; p < d.node_count(); ++p)
            if (auto img = f_op(d, g.nodes[idx].path, p))
                cand.push_back({std::move(*img), idx, p});
    return cand;
}

std::vector<Candidate> expand_openmp(const DynkinDiagram& d, const CrystalGraph& g,
                                     const std::vector<int>& frontier) {
    const int workers = std::max(1, par::jobs());
    std::vector<std::vector<Candidate>> parts(workers);
    const int count = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (int fi = 0; fi < count; ++fi) {
#ifdef _OPENMP
        auto& local = parts[omp_get_thread_num() % workers];
#else
        auto& local = parts[0];
#endif
        int idx = frontier[fi];
        for (int p = 0; p < d.node_count(); ++p)
            if (auto img = f_op(d, g.nodes[idx].path, p))
                local.push_back({std::move(*img), idx, p});
    }
    std::vector<Candidate> cand;
    for (auto& part : parts)
        for (auto& c : part) cand.push_back(std::move(c));
    return cand;
}

}  // namespace

CrystalGraph generate_crystal_serial(const DynkinDiagram& d, const Weight& lambda,
                                     const GenerateOptions& opt) {
    return generate_impl(d, lambda, opt, expand_serial);
}

CrystalGraph generate_crystal_openmp(const DynkinDiagram& d, const Weight& lambda,
                                     const GenerateOptions& opt) {
    return generate_impl(d, lambda, opt, expand_openmp);
}

CrystalGraph generate_crystal(const DynkinDiagram& d, const Weight& lambda,
                              const GenerateOptions& opt) {
    return par::kernel() == par::Kernel::OpenMP ? generate_crystal_openmp(d, lambda, opt)
                                                : generate_crystal_serial(d, lambda, opt);
}

namespace {

// Root coordinates of lambda - beta when integral and nonnegative.
std::optional<std::vector<long long>> drop_coords(const DynkinDiagram& d, const Weight& lambda,
                                                  const Weight& beta, bool report_nonintegral) {
    RootVector x = weight_to_root_basis(d, lambda - beta);
    std::vector<long long> out(x.size());
    for (size_t q = 0; q < x.size(); ++q) {
        if (!is_integral(x[q])) {
            if (report_nonintegral)
                throw NotInRootCone("target weight differs from the shape by a non-integral root combination");
            return std::nullopt;
        }
        out[q] = to_ll(to_int(x[q]));
        if (out[q] < 0) return std::nullopt;
    }
    return out;
}

}  // namespace

std::vector<LSPath> generate_paths_to(const DynkinDiagram& d, const Weight& lambda,
                                      const Weight& beta, long long budget, long long* expanded) {
    auto drop = drop_coords(d, lambda, beta, /*report_nonintegral=*/true);
    if (!drop) return {};
    long long height = 0;
    for (long long c : *drop) height += c;

    GenerateOptions opt;
    opt.budget = budget;
    opt.max_depth = static_cast<int>(height);
    opt.keep = [&drop](const CrystalNode& node) {
        for (size_t q = 0; q < node.counts.size(); ++q)
            if (node.counts[q] > (*drop)[q]) return false;
        return true;
    };
    CrystalGraph g = generate_crystal(d, lambda, opt);
    if (expanded) *expanded += g.expanded;

    std::vector<LSPath> out;
    if (static_cast<int>(g.level_offsets.size()) <= height) return out;
    for (size_t i = g.level_offsets[height]; i < g.nodes.size(); ++i) {
        bool hit = true;
        for (size_t q = 0; q < g.nodes[i].counts.size(); ++q)
            if (g.nodes[i].counts[q] != (*drop)[q]) { hit = false; break; }
        if (hit) out.push_back({g.nodes[i].path, lambda, g.nodes[i].word});
    }
    return out;
}

namespace {

bool mu_dominant(const Path& pi, const Weight& mu) {
    for (const RatVec& v : pi.values)
        for (size_t p = 0; p < v.size(); ++p)
            if (rat_of(mu[static_cast<int>(p)]) + v[p] < 0) return false;
    return true;
}

}  // namespace

long long tensor_count(const DynkinDiagram& d, const Weight& lambda, const Weight& mu,
                       const Weight& nu, long long budget, long long* expanded) {
    Weight beta = nu - mu;
    if (!drop_coords(d, lambda, beta, /*report_nonintegral=*/false)) return 0;
    long long count = 0;
    for (const LSPath& ls : generate_paths_to(d, lambda, beta, budget, expanded))
        if (mu_dominant(ls.path, mu)) ++count;
    return count;
}

std::map<Weight, long long> tensor_decompose_paths(const DynkinDiagram& d, const Weight& lambda,
                                                   const Weight& mu, long long budget) {
    GenerateOptions opt;
    opt.budget = budget;
    opt.max_depth = -1;  // finite-type crystal: runs to exhaustion
    CrystalGraph g = generate_crystal(d, lambda, opt);
    std::map<Weight, long long> out;
    for (const CrystalNode& node : g.nodes)
        if (mu_dominant(node.path, mu)) out[mu + node.path.endpoint_weight()] += 1;
    return out;
}

long long branching_count(const ZkDiagram& zk, const TwoSidedWeight& lambda,
                          const TwoSidedWeight& beta, long long budget, long long* expanded) {
    Weight shape = specialize(zk, lambda);
    Weight target = specialize(zk, beta);
    long long count = 0;
    for (const LSPath& ls : generate_paths_to(zk.diagram(), shape, target, budget, expanded)) {
        bool killed = true;
        for (int c = 1; c <= zk.k() && killed; ++c)
            killed = e_op_is_null(ls.path, zk.chain_node(c));
        if (killed) ++count;
    }
    return count;
}

Path phi_transport(const ZkDiagram& from, const ZkDiagram& to, int s, const Path& pi) {
    if (from.k() <= 2 * s || to.k() <= 2 * s)
        throw NotSupported("transport requires chain lengths above twice the depth");
    for (int c = s + 1; c <= from.k() - s; ++c)
        for (const RatVec& v : pi.values)
            if (v[from.chain_node(c)] != 0)
                throw NotSupported("path is supported on the excluded middle");

    const int n_to = to.node_count();
    std::vector<Rat> times;
    const int m = std::max(pi.segments(), 1);
    for (int i = 0; i <= pi.segments(); ++i)
        times.emplace_back(static_cast<long>(i), static_cast<long>(m));
    std::vector<RatVec> vals(pi.values.size(), RatVec(n_to, Rat(0)));
    for (size_t i = 0; i < pi.values.size(); ++i) {
        for (int p = 0; p < from.d1(); ++p) vals[i][p] = pi.values[i][p];
        for (int c = 1; c <= s; ++c) vals[i][to.chain_node(c)] = pi.values[i][from.chain_node(c)];
        for (int c = 1; c <= s; ++c)
            vals[i][to.chain_node(to.k() + 1 - c)] = pi.values[i][from.chain_node(from.k() + 1 - c)];
        for (int p = 0; p < from.d2(); ++p)
            vals[i][to.d1() + to.k() + p] = pi.values[i][from.d1() + from.k() + p];
    }
    return canonicalize_path(times, vals);
}

std::string crystal_dot(const DynkinDiagram& d, const CrystalGraph& g) {
    (void)d;
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"";
        if (g.nodes[i].word.empty())
            os << "hw";
        else
            for (size_t j = 0; j < g.nodes[i].word.size(); ++j)
                os << (j ? "." : "") << g.nodes[i].word[j] + 1;
        os << "\"];\n";
    }
    for (const auto& e : g.edges)
        os << "  n" << e[0] << " -> n" << e[2] << " [label=\"" << e[1] + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace dynkin
