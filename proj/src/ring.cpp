#include "dynkin/ring.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "dynkin/errors.hpp"

namespace dynkin {

namespace {

std::string pair_key(const MarkedPair& pair) {
    std::ostringstream os;
    auto dump = [&](const MarkedDiagram& md) {
        os << md.mark << ':';
        for (int e : md.eps) os << e << ',';
        for (const Int& z : md.diagram.cartan().a) os << z.get_str() << ',';
        os << '|';
    };
    dump(pair.x1());
    dump(pair.x2());
    return os.str();
}

std::string weight_key(const TwoSidedWeight& w) {
    std::ostringstream os;
    for (long long v : w.left.v) os << v << ',';
    os << ';';
    for (long long v : w.right.v) os << v << ',';
    return os.str();
}

std::mutex g_star_mutex;
std::map<std::string, RingElement> g_star_cache;

// One bucketing run: all stable coefficients of v_lambda * v_mu with depth
// <= depth_bound read off the chain of length k.
std::map<TwoSidedWeight, long long> star_buckets(const MarkedPair& pair,
                                                 const TwoSidedWeight& lambda,
                                                 const TwoSidedWeight& mu,
                                                 const TwoSidedWeight& sum, int lsb, int rsb,
                                                 long long depth_bound, int k, long long budget) {
    ZkDiagram zk = pair.zk(k);
    Weight lk = specialize(zk, lambda);
    Weight mk = specialize(zk, mu);

    std::vector<int> inner_middle;
    for (int p = 0; p < zk.node_count(); ++p)
        if (zk.num_i(p) >= lsb && zk.num_ibar(p) >= rsb) inner_middle.push_back(p);

    GenerateOptions opt;
    opt.budget = budget;
    opt.max_depth = -1;
    opt.keep = [&inner_middle, depth_bound](const CrystalNode& node) {
        for (int p : inner_middle)
            if (node.counts[p] > depth_bound) return false;
        return true;
    };
    CrystalGraph g = generate_crystal(zk.diagram(), lk, opt);

    std::map<TwoSidedWeight, long long> buckets;
    for (const CrystalNode& node : g.nodes) {
        bool dominant = true;
        for (const RatVec& v : node.path.values) {
            for (size_t p = 0; p < v.size() && dominant; ++p)
                if (rat_of(mk[static_cast<int>(p)]) + v[p] < 0) dominant = false;
            if (!dominant) break;
        }
        if (!dominant) continue;
        Weight e = mk + node.path.endpoint_weight();
        TwoSidedWeight nu;
        bool fits = true;
        for (int p = 0; p < zk.node_count() && fits; ++p) {
            if (e[p] == 0) continue;
            if (zk.num_i(p) <= lsb)
                nu.left.set(zk.num_i(p), e[p]);
            else if (zk.num_ibar(p) <= rsb)
                nu.right.set(zk.num_ibar(p), e[p]);
            else
                fits = false;
        }
        if (!fits) continue;
        TwoSidedWeight gamma = sum - nu;
        if (number_of_boxes(pair, gamma) != 0) continue;
        Int dep = depth(pair, gamma);
        if (dep < 0 || dep > int_of(depth_bound)) continue;
        buckets[nu] += 1;
    }
    return buckets;
}

}  // namespace

RingElement star_basis(const MarkedPair& pair, const TwoSidedWeight& lambda,
                       const TwoSidedWeight& mu, long long depth_bound, long long budget) {
    pair.require_extensible();
    if (!lambda.dominant() || !mu.dominant()) throw DomainError("star_basis requires dominant weights");
    if (depth_bound < 0) throw DomainError("depth bound must be nonnegative");

    std::string key;
    {
        std::ostringstream os;
        os << pair_key(pair) << '#' << weight_key(lambda) << '#' << weight_key(mu) << '#'
           << depth_bound;
        key = os.str();
    }
    {
        std::lock_guard<std::mutex> lock(g_star_mutex);
        auto it = g_star_cache.find(key);
        if (it != g_star_cache.end()) return it->second;
    }

    const int d1 = pair.d1(), d2 = pair.d2();
    TwoSidedWeight sum = lambda + mu;
    const int lsb = sum.ls(d1) + static_cast<int>(depth_bound);
    const int rsb = sum.rs(d2) + static_cast<int>(depth_bound);
    int k = std::max<long long>({2 * depth_bound + (lsb - d1) + (rsb - d2) + 1,
                                 static_cast<long long>(lsb + rsb - d1 - d2 + 1),
                                 static_cast<long long>(min_chain_length(pair, lambda)),
                                 static_cast<long long>(min_chain_length(pair, mu)), 1});
    while (pair.det_zk_formula(k) == 0) ++k;
    int k2 = k + 1;
    while (pair.det_zk_formula(k2) == 0) ++k2;

    auto b1 = star_buckets(pair, lambda, mu, sum, lsb, rsb, depth_bound, k, budget);
    auto b2 = star_buckets(pair, lambda, mu, sum, lsb, rsb, depth_bound, k2, budget);
    if (b1 != b2) throw DomainError("product coefficients differ across chain lengths (internal bug)");

    RingElement out;
    out.depth_bound = depth_bound;
    for (const auto& [nu, c] : b1) out.terms[nu] = rat_of(c);
    {
        std::lock_guard<std::mutex> lock(g_star_mutex);
        g_star_cache.emplace(key, out);
    }
    return out;
}

RingElement star(const MarkedPair& pair, const RingElement& xi, const RingElement& eta,
                 long long depth_bound, long long budget) {
    RingElement out;
    out.depth_bound = depth_bound;
    for (const auto& [lam, c] : xi.terms)
        for (const auto& [mu, d] : eta.terms) {
            RingElement prod = star_basis(pair, lam, mu, depth_bound, budget);
            for (const auto& [nu, coeff] : prod.terms) out.add_term(nu, c * d * coeff);
        }
    return out;
}

Int term_depth(const MarkedPair& pair, const TwoSidedWeight& lambda_plus_mu,
               const TwoSidedWeight& nu) {
    return depth(pair, lambda_plus_mu - nu);
}

bool associativity_check(const MarkedPair& pair, const TwoSidedWeight& lambda,
                         const TwoSidedWeight& mu, const TwoSidedWeight& nu, long long depth_bound,
                         long long budget) {
    pair.require_extensible();
    RingElement left = star(pair, star_basis(pair, lambda, mu, depth_bound, budget),
                            RingElement::basis(nu), depth_bound, budget);
    RingElement right = star(pair, RingElement::basis(lambda),
                             star_basis(pair, mu, nu, depth_bound, budget), depth_bound, budget);

    // Only terms of total depth <= depth_bound are complete on both sides;
    // deeper ones may be missing intermediate contributions.
    TwoSidedWeight total = lambda + mu + nu;
    auto filtered = [&](const RingElement& e) {
        std::map<TwoSidedWeight, Rat> keep;
        for (const auto& [g, c] : e.terms) {
            TwoSidedWeight diff = total - g;
            if (number_of_boxes(pair, diff) != 0) continue;
            Int dep = depth(pair, diff);
            if (dep >= 0 && dep <= int_of(depth_bound)) keep.emplace(g, c);
        }
        return keep;
    };
    return filtered(left) == filtered(right);
}

Int triple_product_direct(const MarkedPair& pair, const TwoSidedWeight& lambda,
                          const TwoSidedWeight& mu, const TwoSidedWeight& nu,
                          const TwoSidedWeight& gamma, long long budget) {
    pair.require_extensible();
    TwoSidedWeight total = lambda + mu + nu - gamma;
    if (number_of_boxes(pair, total) != 0) return 0;
    BiciDecomposition bici = bici_decomposition(pair, total);
    if (!bici.nonnegative()) return 0;
    const long long s_tot = to_ll(bici.s);

    const int d1 = pair.d1(), d2 = pair.d2();
    int l = std::max({lambda.ls(d1), mu.ls(d1), nu.ls(d1), gamma.ls(d1)});
    int r = std::max({lambda.rs(d2), mu.rs(d2), nu.rs(d2), gamma.rs(d2)});
    int k = std::max<long long>({2 * s_tot + (l - d1) + (r - d2) + 1,
                                 static_cast<long long>(min_chain_length(pair, lambda)),
                                 static_cast<long long>(min_chain_length(pair, mu)),
                                 static_cast<long long>(min_chain_length(pair, nu)),
                                 static_cast<long long>(min_chain_length(pair, gamma)), 1});
    while (pair.det_zk_formula(k) == 0) ++k;

    ZkDiagram zk = pair.zk(k);
    Weight lk = specialize(zk, lambda);
    Weight mk = specialize(zk, mu);
    Weight nk = specialize(zk, nu);
    Weight gk = specialize(zk, gamma);

    // Bound the first-factor lowering by the total root drop.
    RootVector box_rat = weight_to_root_basis(zk.diagram(), lk + mk + nk - gk);
    std::vector<long long> box(box_rat.size());
    long long height = 0;
    for (size_t q = 0; q < box_rat.size(); ++q) {
        if (!is_integral(box_rat[q]) || box_rat[q] < 0) return 0;
        box[q] = to_ll(to_int(box_rat[q]));
        height += box[q];
    }
    GenerateOptions opt;
    opt.budget = budget;
    opt.max_depth = static_cast<int>(height);
    opt.keep = [&box](const CrystalNode& node) {
        for (size_t q = 0; q < node.counts.size(); ++q)
            if (node.counts[q] > box[q]) return false;
        return true;
    };
    CrystalGraph g = generate_crystal(zk.diagram(), lk, opt);

    std::map<Weight, long long> deltas;
    for (const CrystalNode& node : g.nodes) {
        bool dominant = true;
        for (const RatVec& v : node.path.values) {
            for (size_t p = 0; p < v.size() && dominant; ++p)
                if (rat_of(mk[static_cast<int>(p)]) + v[p] < 0) dominant = false;
            if (!dominant) break;
        }
        if (dominant) deltas[mk + node.path.endpoint_weight()] += 1;
    }
    Int total_count(0);
    for (const auto& [delta, c1] : deltas) {
        long long c2 = tensor_count(zk.diagram(), nk, delta, gk, budget);
        total_count += int_of(c1) * int_of(c2);
    }
    return total_count;
}

}  // namespace dynkin
