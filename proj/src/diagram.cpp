#include "dynkin/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "dynkin/errors.hpp"

namespace dynkin {

std::string to_string(DiagramType t) {
    switch (t) {
        case DiagramType::Finite: return "finite";
        case DiagramType::Affine: return "affine";
        case DiagramType::Indefinite: return "indefinite";
    }
    return "?";
}

DynkinDiagram DynkinDiagram::from_cartan(IntMatrix cartan, std::vector<std::string> labels) {
    if (cartan.n != cartan.m) throw NotGCM("matrix not square");
    const int n = cartan.n;
    for (int p = 0; p < n; ++p) {
        if (cartan.at(p, p) != 2) throw NotGCM("diagonal entry != 2");
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            if (cartan.at(p, q) > 0) throw NotGCM("positive off-diagonal entry");
            if ((cartan.at(p, q) == 0) != (cartan.at(q, p) == 0))
                throw NotGCM("asymmetric zero pattern");
        }
    }

    // Symmetrizer by ratio propagation along a spanning forest, verified on
    // the remaining edges, then scaled to minimal positive integers per
    // component.
    std::vector<Rat> d(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        const int c = ncomp++;
        std::vector<int> stack{root};
        comp[root] = c;
        d[root] = 1;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            for (int q = 0; q < n; ++q) {
                if (q == p || cartan.at(p, q) == 0) continue;
                // d_p C(p,q) = d_q C(q,p)
                Rat dq = d[p] * Rat(cartan.at(p, q)) / Rat(cartan.at(q, p));
                if (comp[q] < 0) {
                    comp[q] = c;
                    d[q] = dq;
                    stack.push_back(q);
                } else if (d[q] != dq) {
                    throw NotSymmetrizable();
                }
            }
        }
        // Scale this component: clear denominators, divide by the gcd.
        Int lcm(1);
        for (int p = 0; p < n; ++p)
            if (comp[p] == c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d[p].get_den().get_mpz_t());
        Int g(0);
        for (int p = 0; p < n; ++p)
            if (comp[p] == c) {
                Rat scaled = d[p] * Rat(lcm);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num().get_mpz_t());
            }
        for (int p = 0; p < n; ++p)
            if (comp[p] == c) d[p] = d[p] * Rat(lcm) / Rat(g);
    }

    DynkinDiagram dd;
    dd.n_ = n;
    dd.cartan_ = std::move(cartan);
    if (labels.empty()) {
        labels.resize(n);
        for (int p = 0; p < n; ++p) labels[p] = std::to_string(p + 1);
    }
    if (static_cast<int>(labels.size()) != n) throw NotGCM("label count mismatch");
    dd.labels_ = std::move(labels);
    dd.symmetrizer_.resize(n);
    for (int p = 0; p < n; ++p) dd.symmetrizer_[p] = to_int(d[p]);
    return dd;
}

DynkinDiagram validate_gcm(const IntMatrix& m, std::vector<std::string> labels) {
    return DynkinDiagram::from_cartan(m, std::move(labels));
}

std::vector<int> DynkinDiagram::neighbors(int p) const {
    std::vector<int> out;
    for (int q = 0; q < n_; ++q)
        if (adjacent(p, q)) out.push_back(q);
    return out;
}

bool DynkinDiagram::indecomposable() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int q : neighbors(p))
            if (!seen[q]) {
                seen[q] = 1;
                ++cnt;
                stack.push_back(q);
            }
    }
    return cnt == n_;
}

const Int& DynkinDiagram::det() const {
    if (!det_) det_ = bareiss_det(cartan_);
    return *det_;
}

DiagramType DynkinDiagram::classify() const {
    if (!indecomposable()) throw Decomposable();
    // Symmetrized matrix S = D C is symmetric with integer entries. For an
    // indecomposable GCM: positive definite <=> finite, positive semidefinite
    // of corank 1 <=> affine, anything else indefinite. Every proper leading
    // principal submatrix of a finite or affine diagram is a direct sum of
    // finite-type blocks, so the leading-minor test below is conclusive.
    IntMatrix s(n_, n_);
    for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q) s.at(p, q) = symmetrizer_[p] * cartan_.at(p, q);
    bool proper_positive = true;
    for (int k = 1; k < n_; ++k) {
        IntMatrix lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead.at(i, j) = s.at(i, j);
        if (bareiss_det(lead) <= 0) {
            proper_positive = false;
            break;
        }
    }
    if (!proper_positive) return DiagramType::Indefinite;
    Int full = bareiss_det(s);
    if (full > 0) return DiagramType::Finite;
    if (full == 0) return DiagramType::Affine;
    return DiagramType::Indefinite;
}

DynkinDiagram DynkinDiagram::remove_node(int p) const {
    IntMatrix c(n_ - 1, n_ - 1);
    std::vector<std::string> labels;
    labels.reserve(n_ - 1);
    for (int i = 0, r = 0; i < n_; ++i) {
        if (i == p) continue;
        for (int j = 0, s = 0; j < n_; ++j) {
            if (j == p) continue;
            c.at(r, s) = cartan_.at(i, j);
            ++s;
        }
        labels.push_back(labels_[i]);
        ++r;
    }
    return from_cartan(std::move(c), std::move(labels));
}

MarkedDiagram::MarkedDiagram(DynkinDiagram d, int mark_node) : diagram(std::move(d)), mark(mark_node) {
    const int n = diagram.node_count();
    if (mark < 0 || mark >= n) throw DomainError("mark is not a valid node index");
    eps.resize(n);
    int next = 1;
    for (int p = 0; p < n; ++p)
        if (p != mark) eps[p] = next++;
    eps[mark] = n;
}

MarkedDiagram::MarkedDiagram(DynkinDiagram d, int mark_node, std::vector<int> numbering)
    : diagram(std::move(d)), mark(mark_node), eps(std::move(numbering)) {
    const int n = diagram.node_count();
    if (mark < 0 || mark >= n) throw DomainError("mark is not a valid node index");
    std::vector<char> seen(n + 1, 0);
    for (int p = 0; p < n; ++p) {
        if (eps[p] < 1 || eps[p] > n || seen[eps[p]]) throw DomainError("numbering is not a bijection");
        seen[eps[p]] = 1;
    }
    if (eps[mark] != n) throw DomainError("numbering must place the mark last");
}

int MarkedDiagram::node_at(int j) const {
    for (int p = 0; p < node_count(); ++p)
        if (eps[p] == j) return p;
    throw std::logic_error("node_at: value out of range");
}

MarkedDiagram attach_chain(const MarkedDiagram& md, int m) {
    if (m < -1) throw DomainError("attach_chain requires m >= -1");
    if (!md.is_marked()) throw DomainError("attach_chain requires a marked diagram");
    if (m == 0) return md;
    const int d = md.node_count();
    if (m == -1) {
        MarkedDiagram out;
        out.diagram = md.diagram.remove_node(md.mark);
        out.mark = -1;
        out.eps.resize(d - 1);
        // Gap-free renumbering preserving the order of the survivors.
        std::vector<std::pair<int, int>> order;
        for (int p = 0; p < d; ++p)
            if (p != md.mark) order.emplace_back(md.eps[p], p > md.mark ? p - 1 : p);
        std::sort(order.begin(), order.end());
        for (int r = 0; r < static_cast<int>(order.size()); ++r) out.eps[order[r].second] = r + 1;
        return out;
    }

    const int n = d + m;
    IntMatrix c(n, n);
    std::vector<std::string> labels(n);
    for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) c.at(p, q) = md.diagram.cartan_at(p, q);
        labels[p] = md.diagram.label(p);
    }
    for (int j = d; j < n; ++j) {
        c.at(j, j) = 2;
        labels[j] = "+" + std::to_string(j - d + 1);
    }
    c.at(md.mark, d) = -1;
    c.at(d, md.mark) = -1;
    for (int j = d; j + 1 < n; ++j) {
        c.at(j, j + 1) = -1;
        c.at(j + 1, j) = -1;
    }
    std::vector<int> eps(n);
    for (int p = 0; p < d; ++p) eps[p] = md.eps[p];
    for (int j = d; j < n; ++j) eps[j] = j + 1;
    return MarkedDiagram(DynkinDiagram::from_cartan(std::move(c), std::move(labels)), n - 1, std::move(eps));
}

Int delta(const MarkedDiagram& md) {
    return md.diagram.det() - attach_chain(md, -1).diagram.det();
}

bool is_extensible(const MarkedDiagram& md) {
    const Int det = md.diagram.det();
    if (det == 0) return false;
    const Int del = delta(md);
    if (del == 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), det.get_mpz_t(), del.get_mpz_t());
    return g == 1;
}

MarkedPair::MarkedPair(MarkedDiagram x1, MarkedDiagram x2) : x1_(std::move(x1)), x2_(std::move(x2)) {
    if (!x1_.is_marked() || !x2_.is_marked()) throw DomainError("pair requires marked diagrams");
    det1_ = x1_.diagram.det();
    det2_ = x2_.diagram.det();
    delta1_ = delta(x1_);
    delta2_ = delta(x2_);
}

bool MarkedPair::extensible() const {
    if (!is_extensible(x1_) || !is_extensible(x2_)) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), delta1_.get_mpz_t(), delta2_.get_mpz_t());
    return g == 1;
}

void MarkedPair::require_extensible() const {
    if (!extensible()) throw NotExtensiblePair();
}

Int MarkedPair::det_zk_formula(int k) const {
    if (k < 1) throw DomainError("det_zk_formula requires k >= 1");
    return Int(k - 1) * delta1_ * delta2_ + det1_ * delta2_ + det2_ * delta1_;
}

std::optional<int> MarkedPair::singular_k() const {
    // det Z_k is linear in k with slope delta1*delta2; for extensible pairs
    // the slope is nonzero, so at most one integer root.
    const Int slope = delta1_ * delta2_;
    if (slope == 0) return std::nullopt;
    const Int c1 = det_zk_formula(1);
    Int num = -c1;  // det Z_k = c1 + (k-1)*slope
    if (num % slope != 0) return std::nullopt;
    Int k0 = num / slope + 1;
    if (k0 < 1) return std::nullopt;
    return static_cast<int>(to_ll(k0));
}

ZkDiagram MarkedPair::zk(int k) const { return ZkDiagram(*this, k); }

ZkDiagram::ZkDiagram(const MarkedPair& pair, int k) : k_(k), d1_(pair.d1()), d2_(pair.d2()) {
    if (k < 1) throw DomainError("Z_k requires k >= 1");
    const int n = d1_ + d2_ + k;
    IntMatrix c(n, n);
    std::vector<std::string> labels(n);
    const auto& x1 = pair.x1();
    const auto& x2 = pair.x2();
    for (int p = 0; p < d1_; ++p) {
        for (int q = 0; q < d1_; ++q) c.at(p, q) = x1.diagram.cartan_at(p, q);
        labels[p] = "L" + x1.diagram.label(p);
    }
    for (int j = 0; j < k; ++j) {
        c.at(d1_ + j, d1_ + j) = 2;
        labels[d1_ + j] = "m" + std::to_string(j + 1);
    }
    const int off = d1_ + k;
    for (int p = 0; p < d2_; ++p) {
        for (int q = 0; q < d2_; ++q) c.at(off + p, off + q) = x2.diagram.cartan_at(p, q);
        labels[off + p] = "R" + x2.diagram.label(p);
    }
    for (int j = 0; j + 1 < k; ++j) {
        c.at(d1_ + j, d1_ + j + 1) = -1;
        c.at(d1_ + j + 1, d1_ + j) = -1;
    }
    c.at(x1.mark, d1_) = -1;
    c.at(d1_, x1.mark) = -1;
    c.at(off + x2.mark, d1_ + k - 1) = -1;
    c.at(d1_ + k - 1, off + x2.mark) = -1;
    diagram_ = DynkinDiagram::from_cartan(std::move(c), std::move(labels));

    num_i_.resize(n);
    num_ibar_.resize(n);
    for (int p = 0; p < d1_; ++p) {
        num_i_[p] = x1.eps[p];
        num_ibar_[p] = (d1_ + d2_ + k + 1) - x1.eps[p];
    }
    for (int j = 1; j <= k; ++j) {
        num_i_[d1_ + j - 1] = d1_ + j;
        num_ibar_[d1_ + j - 1] = (d2_ + k + 1) - j;
    }
    for (int p = 0; p < d2_; ++p) {
        num_i_[off + p] = (d1_ + d2_ + k + 1) - x2.eps[p];
        num_ibar_[off + p] = x2.eps[p];
    }
    by_i_.assign(n, -1);
    by_ibar_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        by_i_[num_i_[p] - 1] = p;
        by_ibar_[num_ibar_[p] - 1] = p;
    }
}

}  // namespace dynkin
