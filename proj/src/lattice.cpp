#include "dynkin/lattice.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "dynkin/errors.hpp"

namespace dynkin {

Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (int i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (int i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

RootVector weight_to_root_basis(const DynkinDiagram& d, const Weight& w) {
    RatVec rhs(d.node_count());
    for (int p = 0; p < d.node_count(); ++p) rhs[p] = rat_of(w[p]);
    auto x = solve_exact(d.cartan(), rhs);
    if (!x) throw SingularCartan();
    return *x;
}

bool all_integral(const RootVector& x) {
    for (const Rat& q : x)
        if (!is_integral(q)) return false;
    return true;
}

bool in_root_lattice(const DynkinDiagram& d, const Weight& w) {
    return all_integral(weight_to_root_basis(d, w));
}

std::optional<Int> root_cone_height(const DynkinDiagram& d, const Weight& w) {
    RootVector x = weight_to_root_basis(d, w);
    Int h(0);
    for (const Rat& q : x) {
        if (!is_integral(q) || q < 0) return std::nullopt;
        h += to_int(q);
    }
    return h;
}

Weight specialize(const ZkDiagram& zk, const TwoSidedWeight& gamma) {
    if (zk.k() < gamma.ell(zk.d1(), zk.d2()) - zk.d1() - zk.d2()) throw SupportTooWide();
    const int n = zk.node_count();
    Weight w(n);
    for (int p = 0; p < n; ++p)
        w[p] = gamma.left.get(zk.num_i(p)) + gamma.right.get(zk.num_ibar(p));
    return w;
}

int min_chain_length(const MarkedPair& pair, const TwoSidedWeight& gamma) {
    return std::max(1, gamma.ell(pair.d1(), pair.d2()) - pair.d1() - pair.d2());
}

namespace {

std::string marked_diagram_key(const MarkedDiagram& md) {
    std::ostringstream os;
    os << md.mark << '|';
    for (int e : md.eps) os << e << ',';
    os << '|';
    const auto& c = md.diagram.cartan();
    for (const Int& z : c.a) os << z.get_str() << ',';
    return os.str();
}

std::mutex g_aseq_mutex;
std::map<std::string, IntVec> g_aseq_cache;

IntVec compute_a_sequence(const MarkedDiagram& md, int count) {
    if (!is_extensible(md)) throw NotExtensible();
    const int d = md.node_count();
    const Int del = delta(md);

    int m = std::max(count - d, 0);
    for (int tries = 0; tries < 3; ++tries, ++m) {
        MarkedDiagram xm = attach_chain(md, m);
        const Int n_det = xm.diagram.det();
        if (n_det == 0) continue;
        auto inv = invert_exact(xm.diagram.cartan());
        if (!inv) continue;
        const int end = xm.node_at(d + m);
        IntVec a(count);
        for (int i = 1; i <= count; ++i) {
            const int p = xm.node_at(i);
            Rat val = Rat(n_det) * (*inv)[end][p];
            if (!is_integral(val)) throw MiddleNotConstant();  // cannot happen for extensible md
            a[i - 1] = to_int(val);
            // Congruence check: -delta w_p - a_i w_end lies in the root lattice.
            for (int q = 0; q < xm.node_count(); ++q) {
                Rat coeff = -Rat(del) * (*inv)[q][p] - Rat(a[i - 1]) * (*inv)[q][end];
                if (!is_integral(coeff))
                    throw DomainError("a-sequence congruence failed (internal bug)");
            }
        }
        return a;
    }
    throw NoAdmissibleM();
}

}  // namespace

IntVec a_sequence(const MarkedDiagram& md, int count) {
    if (count <= 0) return {};
    const std::string key = marked_diagram_key(md);
    {
        std::lock_guard<std::mutex> lock(g_aseq_mutex);
        auto it = g_aseq_cache.find(key);
        if (it != g_aseq_cache.end() && static_cast<int>(it->second.size()) >= count)
            return IntVec(it->second.begin(), it->second.begin() + count);
    }
    IntVec a = compute_a_sequence(md, count);
    {
        std::lock_guard<std::mutex> lock(g_aseq_mutex);
        auto& slot = g_aseq_cache[key];
        if (static_cast<int>(slot.size()) < count) slot = a;
    }
    return a;
}

namespace {

Int weighted_a_sum(const MarkedDiagram& md, const HVector& x) {
    IntVec a = a_sequence(md, x.ell());
    Int s(0);
    for (int i = 1; i <= x.ell(); ++i) s += int_of(x.get(i)) * a[i - 1];
    return s;
}

}  // namespace

Int number_of_boxes(const MarkedPair& pair, const TwoSidedWeight& gamma) {
    pair.require_extensible();
    return pair.delta2() * weighted_a_sum(pair.x1(), gamma.left) -
           pair.delta1() * weighted_a_sum(pair.x2(), gamma.right);
}

Int depth(const MarkedPair& pair, const TwoSidedWeight& gamma) {
    if (number_of_boxes(pair, gamma) != 0) throw NonzeroBoxes();
    const Int sx = weighted_a_sum(pair.x1(), gamma.left);
    if (sx % pair.delta1() != 0) throw DomainError("depth not integral (internal bug)");
    Int dep = sx / pair.delta1();
    const Int sy = weighted_a_sum(pair.x2(), gamma.right);
    if (dep * pair.delta2() != sy) throw DomainError("depth mismatch between sides (internal bug)");
    return dep;
}

bool equivalent(const MarkedPair& pair, const TwoSidedWeight& lambda, const TwoSidedWeight& mu) {
    return number_of_boxes(pair, lambda - mu) == 0;
}

namespace {

struct BiciProbe {
    IntVec b;
    Int s;
    IntVec c;
};

BiciProbe read_bici_at(const MarkedPair& pair, const TwoSidedWeight& gamma, int k, int l, int r) {
    ZkDiagram zk = pair.zk(k);
    RootVector x = weight_to_root_basis(zk.diagram(), specialize(zk, gamma));
    if (!all_integral(x))
        throw DomainError("zero-box weight not in the root lattice (internal bug)");
    BiciProbe out;
    out.b.resize(std::max(l - 1, 0));
    out.c.resize(std::max(r - 1, 0));
    for (int i = 1; i <= l - 1; ++i) out.b[i - 1] = to_int(x[zk.node_by_i(i)]);
    for (int j = 1; j <= r - 1; ++j) out.c[j - 1] = to_int(x[zk.node_by_ibar(j)]);
    bool have_s = false;
    for (int p = 0; p < zk.node_count(); ++p) {
        if (zk.num_i(p) <= l - 1 || zk.num_ibar(p) <= r - 1) continue;
        Int v = to_int(x[p]);
        if (!have_s) {
            out.s = v;
            have_s = true;
        } else if (out.s != v) {
            throw MiddleNotConstant();
        }
    }
    if (!have_s) throw MiddleNotConstant();
    return out;
}

}  // namespace

BiciDecomposition bici_decomposition(const MarkedPair& pair, const TwoSidedWeight& gamma,
                                     int probe_k) {
    pair.require_extensible();
    if (number_of_boxes(pair, gamma) != 0) throw NonzeroBoxes();
    const int l = gamma.ls(pair.d1());
    const int r = gamma.rs(pair.d2());
    const int k_min = std::max(l + r - pair.d1() - pair.d2(), 1);
    if (probe_k >= 0 && probe_k < k_min) throw DomainError("probe k below the support bound");
    int k = probe_k >= 0 ? probe_k : k_min;

    BiciDecomposition out;
    if (pair.det_zk_formula(k) == 0) {
        out.skipped_k0 = k;
        ++k;
    }
    BiciProbe first = read_bici_at(pair, gamma, k, l, r);
    int k2 = k + 1;
    if (pair.det_zk_formula(k2) == 0) {
        out.skipped_k0 = k2;
        ++k2;
    }
    BiciProbe second = read_bici_at(pair, gamma, k2, l, r);
    if (first.b != second.b || first.s != second.s || first.c != second.c)
        throw DomainError("bici reconstruction differs across k (internal bug)");
    if (first.s != depth(pair, gamma))
        throw DomainError("bici middle coefficient differs from depth (internal bug)");

    out.b = std::move(first.b);
    out.s = first.s;
    out.c = std::move(first.c);
    out.probe_k = k;
    return out;
}

std::vector<int> bridge_nodes(const ZkDiagram& zk) {
    std::vector<int> out;
    // the X1 mark carries i = d1, the chain d1+1..d1+k, the X2 mark d1+k+1
    for (int value = zk.d1(); value <= zk.d1() + zk.k() + 1; ++value)
        out.push_back(zk.node_by_i(value));
    return out;
}

Rat cu_minus_cv(const MarkedPair& pair, const ZkDiagram& zk, int u, int v) {
    if (zk.num_i(v) != zk.num_i(u) + 1) throw DomainError("nodes must be adjacent with i(v) = i(u)+1");
    if (zk.num_i(u) < zk.d1() || zk.num_i(v) > zk.d1() + zk.k() + 1)
        throw DomainError("nodes must lie in the bridge");
    const Int det_zk = pair.det_zk_formula(zk.k());
    if (det_zk == 0) throw SingularCartan();
    Rat formula = Rat(pair.det_x1() * pair.delta2() + pair.det_x2() * pair.delta1() +
                      Int(zk.k() - 2) * pair.delta1() * pair.delta2()) /
                  Rat(det_zk);

    Weight w(zk.node_count());
    w[u] = 1;
    w[v] = -1;
    RootVector x = weight_to_root_basis(zk.diagram(), w);
    if (x[u] - x[v] != formula)
        throw DomainError("closed form disagrees with direct computation (internal bug)");
    return formula;
}

}  // namespace dynkin
