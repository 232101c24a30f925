#pragma once

#include <json.hpp>

#include "dynkin/hvector.hpp"
#include "dynkin/lattice.hpp"
#include "dynkin/ring.hpp"
#include "dynkin/stab.hpp"

namespace dynkin {

using nlohmann::json;

inline json to_json(const Weight& w) {
    json a = json::array();
    for (long long c : w.coords) a.push_back(c);
    return a;
}

inline json to_json(const HVector& h) {
    json a = json::array();
    for (long long c : h.v) a.push_back(c);
    return a;
}

inline json to_json(const TwoSidedWeight& w) {
    return json{{"left", to_json(w.left)}, {"right", to_json(w.right)}};
}

inline json to_json(const Int& z) {
    // exact: decimal string beyond 64 bits, plain integer otherwise
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

inline json rat_to_json(const Rat& q) { return json(q.get_str()); }

inline json to_json(const StableResult& r) {
    json j{{"value", to_json(r.value)},
           {"K", r.threshold_k},
           {"checked_ks", r.checked_ks},
           {"path_nodes_expanded", r.path_nodes_expanded}};
    json t = json::array();
    for (auto& [k, ms] : r.timings_ms) t.push_back(json{{"k", k}, {"ms", ms}});
    j["timings"] = t;
    if (r.skipped_k0) j["skipped_k0"] = *r.skipped_k0;
    return j;
}

inline json to_json(const BiciDecomposition& b) {
    json jb = json::array(), jc = json::array();
    for (const Int& v : b.b) jb.push_back(to_json(v));
    for (const Int& v : b.c) jc.push_back(to_json(v));
    json j{{"b", jb}, {"s", to_json(b.s)}, {"c", jc}, {"probe_k", b.probe_k}};
    if (b.skipped_k0) j["skipped_k0"] = *b.skipped_k0;
    return j;
}

inline json ring_element_to_json(const MarkedPair& pair, const RingElement& e,
                                 const TwoSidedWeight& product_of) {
    json terms = json::array();
    for (const auto& [nu, coeff] : e.terms) {
        json t{{"weight", to_json(nu)}, {"coeff", rat_to_json(coeff)}};
        t["depth"] = to_json(term_depth(pair, product_of, nu));
        terms.push_back(std::move(t));
    }
    return json{{"depth_bound", e.depth_bound}, {"terms", terms}};
}

}  // namespace dynkin
