#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynkin/errors.hpp"
#include "dynkin/hweights.hpp"
#include "dynkin/oracle.hpp"
#include "dynkin/specparse.hpp"
#include "dynkin/stab.hpp"
#include "helpers.hpp"

using namespace dynkin;
using namespace dynkin::test;

namespace {

Weight digits(const std::string& s) {
    std::vector<long long> v;
    for (char c : s) v.push_back(c - '0');
    return Weight(v);
}

// Stable coefficient read from the finite-type chain at a fixed rank via
// the character oracle.
Int oracle_lr_on_chain(const MarkedPair& pair, const TwoSidedWeight& lambda,
                       const TwoSidedWeight& mu, const TwoSidedWeight& nu, int k) {
    ZkDiagram zk = pair.zk(k);
    WeylContext ctx(zk.diagram());
    auto dec = tensor_decompose(ctx, specialize(zk, lambda), specialize(zk, mu));
    auto it = dec.find(specialize(zk, nu));
    return it == dec.end() ? Int(0) : it->second;
}

}  // namespace

TEST_CASE("stable tensor multiplicities on the double chain") {
    MarkedPair a11 = pair_of("A1,A1");
    TwoSidedWeight lam = tsw({1}, {1});

    // top component
    StableResult top = stable_tensor(a11, lam, lam, lam + lam);
    CHECK(top.value == 1);
    CHECK(top.threshold_k == 1);

    // inequivalent target
    StableResult zero = stable_tensor(a11, lam, lam, tsw({1}, {}));
    CHECK(zero.value == 0);
    CHECK(zero.threshold_k == 1);
    CHECK(zero.checked_ks.empty());

    // negative root-cone shape
    StableResult neg = stable_tensor(a11, lam, lam, tsw({3}, {1, 1}));
    CHECK(neg.value == 0);

    // the adjoint-cube coefficient stabilizes to the classical value 2
    StableResult adj = stable_tensor(a11, lam, lam, lam);
    CHECK(adj.value == 2);
    CHECK(adj.threshold_k == 3);
    REQUIRE(adj.checked_ks.size() >= 2);
    CHECK(adj.checked_ks[0] == 3);
    CHECK(adj.checked_ks[1] == 4);
    for (int k : adj.checked_ks) CHECK(oracle_lr_on_chain(a11, lam, lam, lam, k) == adj.value);
    CHECK(oracle_lr_on_chain(a11, lam, lam, lam, 5) == adj.value);

    CHECK_THROWS_AS(stable_tensor(pair_of("B3(mark=3),A1"), lam, lam, lam), NotExtensiblePair);
}

TEST_CASE("stable tensor against the oracle on several triples") {
    MarkedPair a11 = pair_of("A1,A1");
    struct Triple {
        TwoSidedWeight l, m, n;
    };
    std::vector<Triple> triples = {
        {tsw({1}, {1}), tsw({1}, {1}), tsw({1}, {1})},
        {tsw({1}, {1}), tsw({1}, {1}), tsw({2}, {2})},
        {tsw({1}, {1}), tsw({1}, {1}), tsw({0, 1}, {0, 1})},
        {tsw({2}, {}), tsw({}, {2}), tsw({1}, {1})},
        {tsw({1, 1}, {}), tsw({}, {1}), tsw({1}, {0, 1})},
        {tsw({2}, {1}), tsw({1}, {2}), tsw({1, 1}, {1, 1})},
    };
    for (const auto& t : triples) {
        StableResult r = stable_tensor(a11, t.l, t.m, t.n);
        // the stable value equals the classical coefficient at larger ranks
        INFO("K=", r.threshold_k);
        CHECK(oracle_lr_on_chain(a11, t.l, t.m, t.n, r.threshold_k + 2) == r.value);
        CHECK(oracle_lr_on_chain(a11, t.l, t.m, t.n, r.threshold_k + 3) == r.value);
        // positivity forces comparability
        if (r.value > 0) CHECK(po_geq(a11, t.l + t.m, t.n));
    }
}

TEST_CASE("stable tensor on an exceptional pair") {
    MarkedPair e6 = pair_of("E6,A1");
    TwoSidedWeight lam = tsw({1}, {1});
    StableResult top = stable_tensor(e6, lam, lam, lam + lam);
    CHECK(top.value == 1);

    // depth-zero non-top component: gamma = (eps1, eps1) has boxes
    // a_1(E6)*1 - (-1)*1 != 0 in general, so pick the valid target by
    // construction: nu = lambda + mu minus nothing is the only depth-0 one
    auto s0 = interval_up_h2(e6, lam + lam, 0);
    for (const auto& nu : s0) {
        if (nu == lam + lam) continue;
        StableResult r = stable_tensor(e6, lam, lam, nu);
        CHECK(r.value >= 0);
    }
}

TEST_CASE("stable branching") {
    MarkedPair a11 = pair_of("A1,A1");
    TwoSidedWeight lam = tsw({1}, {1});

    StableResult self = stable_branching(a11, lam, lam);
    CHECK(self.value == 1);

    StableResult zero = stable_branching(a11, lam, tsw({1}, {}));
    CHECK(zero.value == 0);

    StableResult middle = stable_branching(a11, lam, tsw({}, {}));
    CHECK(middle.threshold_k == 3);
    long long direct5 = branching_count(a11.zk(5), lam, tsw({}, {}));
    CHECK(middle.value == int_of(direct5));
}

TEST_CASE("series heights") {
    CHECK(bcd_height(BcdFamily::B, tsw({}, {})) == 0);
    CHECK(bcd_height(BcdFamily::B, tsw({1}, {1})) == Rat(1, 2));
    CHECK(bcd_height(BcdFamily::B, tsw({2, 1}, {})) == 2);
    CHECK(bcd_height(BcdFamily::C, tsw({}, {1, 2})) == 0);
    CHECK(bcd_height(BcdFamily::C, tsw({1, 1}, {})) == 2);
    CHECK(bcd_height(BcdFamily::D, tsw({1, 1}, {})) == 1);
    CHECK(bcd_height(BcdFamily::D, tsw({1, 1, 1}, {})) == 2);
}

TEST_CASE("series membership by vanishing height") {
    CHECK(bcd_rs_membership(BcdFamily::B, tsw({}, {}), 1, 1) == Int(0));
    CHECK(bcd_rs_membership(BcdFamily::B, tsw({}, {0, 1}), 1, 2) == Int(2));
    CHECK_FALSE(bcd_rs_membership(BcdFamily::B, tsw({1}, {}), 1, 1).has_value());
    // a height-zero left part with even spin coordinate
    HVector x;
    x.set(1, 2);
    x.set(2, -1);
    CHECK(bcd_rs_membership(BcdFamily::B, TwoSidedWeight(x, hv_unit(1)), 2, 1) == Int(1));
    CHECK(bcd_rs_membership(BcdFamily::C, tsw({}, {2}), 1, 1) == Int(2));
    CHECK(bcd_rs_membership(BcdFamily::D, tsw({}, {1}), 3, 1) == Int(1));
}

TEST_CASE("series specialization digits") {
    CHECK(bcd_specialize(BcdFamily::B, tsw({1}, {1}), 3) == digits("101"));
    CHECK(bcd_specialize(BcdFamily::B, tsw({1}, {1}), 5) == digits("10001"));
    CHECK(bcd_specialize(BcdFamily::B, tsw({0, 1}, {2}), 4) == digits("0102"));
    CHECK_THROWS_AS(bcd_specialize(BcdFamily::B, tsw({1, 1}, {1, 1}), 3), SupportTooWide);
}

TEST_CASE("series stabilization matches the printed tables") {
    TwoSidedWeight lam = tsw({1}, {1});
    WeylContext b3(standard_diagram('B', 3));
    WeylContext b4(standard_diagram('B', 4));
    WeylContext b5(standard_diagram('B', 5));
    auto t3 = tensor_decompose(b3, digits("101"), digits("101"));
    auto t4 = tensor_decompose(b4, digits("1001"), digits("1001"));
    auto t5 = tensor_decompose(b5, digits("10001"), digits("10001"));

    // rows with height one keep their multiplicity along the series; the
    // stabilized path count agrees with all three tables
    std::vector<TwoSidedWeight> rows = {tsw({2}, {2}),    tsw({2}, {0, 1}), tsw({2}, {1}),
                                        tsw({2}, {}),     tsw({0, 1}, {2}), tsw({0, 1}, {1}),
                                        tsw({0, 1}, {}),  tsw({0, 1}, {0, 1})};
    for (const auto& nu : rows) {
        CHECK(bcd_height(BcdFamily::B, nu) == 1);
        StableResult r = bcd_stable_tensor(BcdFamily::B, lam, lam, nu);
        auto find = [](const std::map<Weight, Int>& табле, const Weight& w) {
            auto it = табле.find(w);
            return it == табле.end() ? Int(0) : it->second;
        };
        CHECK(r.value == find(t3, bcd_specialize(BcdFamily::B, nu, 3)));
        CHECK(r.value == find(t4, bcd_specialize(BcdFamily::B, nu, 4)));
        CHECK(r.value == find(t5, bcd_specialize(BcdFamily::B, nu, 5)));
    }

    // the top component for one-sided weights: heights vanish identically
    StableResult one_sided =
        bcd_stable_tensor(BcdFamily::C, tsw({}, {1}), tsw({}, {1}), tsw({}, {0, 1}));
    CHECK(one_sided.value == 1);

    CHECK_THROWS_AS(bcd_stable_tensor(BcdFamily::B, lam, lam, tsw({1}, {1})), HeightMismatch);

    // experimental observation mode reports counts without judging them
    auto observed = bcd_observe_tensor(BcdFamily::B, lam, lam, tsw({1}, {1}), 2, 500'000);
    CHECK(observed.size() == 2);
}

TEST_CASE("height subadditivity across the printed tables") {
    // whenever a component shows up at ranks 3..5 with positive
    // multiplicity, its height is at most the sum of the factor heights
    TwoSidedWeight lam = tsw({1}, {1});
    Rat budget = bcd_height(BcdFamily::B, lam) + bcd_height(BcdFamily::B, lam);
    WeylContext b4(standard_diagram('B', 4));
    for (auto& [nu, mult] : tensor_decompose(b4, digits("1001"), digits("1001"))) {
        // read nu back as a two-sided weight: left digits then right digits
        HVector x, y;
        x.set(1, nu[0]);
        x.set(2, nu[1]);
        y.set(1, nu[3]);
        y.set(2, nu[2]);
        CHECK(bcd_height(BcdFamily::B, TwoSidedWeight(x, y)) <= budget);
    }
}

TEST_CASE("one-sided branching against the character oracle") {
    // B-series, weights on the chain end only: branching counts from the
    // path model match the Levi-highest-vector counts at ranks 4 and 5
    TwoSidedWeight lam = tsw({}, {0, 1});
    std::vector<TwoSidedWeight> betas = {tsw({}, {0, 1}), tsw({}, {2}), tsw({}, {})};
    const int l = 3;
    for (int n : {4, 5}) {
        DynkinDiagram d = bcd_diagram(BcdFamily::B, n);
        WeylContext ctx(d);
        for (const auto& beta : betas) {
            const int r = std::max(beta.right.ell(), 2);
            long long by_paths = bcd_branching_count(BcdFamily::B, lam, beta, n, l, r);
            std::vector<int> middle;
            for (int node = l; node < n - r; ++node) middle.push_back(node);
            Int by_chars = levi_branching(ctx, bcd_specialize(BcdFamily::B, lam, n), middle,
                                          bcd_specialize(BcdFamily::B, beta, n));
            CHECK(by_chars == int_of(by_paths));
        }
    }
}
