#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynkin/exact_linalg.hpp"
#include "dynkin/rational.hpp"

namespace dynkin {

enum class DiagramType { Finite, Affine, Indefinite };

std::string to_string(DiagramType t);

/// A Dynkin diagram given by its symmetrizable generalized Cartan matrix.
///
/// Convention: cartan(p, q) is the value of the simple root alpha_q on the
/// simple coroot of node p. Node indices are 0-based internally; labels
/// default to "1".."n" to match the usual figures.
///
/// Immutable after construction; safe to share across threads.
class DynkinDiagram {
  public:
    /// The empty diagram (det 1).
    DynkinDiagram() = default;

    /// Checks the GCM axioms and symmetrizability. Throws NotGCM or
    /// NotSymmetrizable. The symmetrizer is normalized to minimal positive
    /// integers on each connected component.
    static DynkinDiagram from_cartan(IntMatrix cartan, std::vector<std::string> labels = {});

    int node_count() const { return n_; }
    const IntMatrix& cartan() const { return cartan_; }
    const Int& cartan_at(int p, int q) const { return cartan_.at(p, q); }
    const std::string& label(int p) const { return labels_[p]; }
    const IntVec& symmetrizer() const { return symmetrizer_; }

    bool adjacent(int p, int q) const { return p != q && cartan_.at(p, q) != 0; }
    std::vector<int> neighbors(int p) const;
    bool indecomposable() const;

    /// det of the Cartan matrix; 1 for the empty diagram.
    const Int& det() const;

    /// Finite / Affine / Indefinite by exact definiteness of the symmetrized
    /// matrix. Throws Decomposable for decomposable diagrams.
    DiagramType classify() const;

    /// Diagram with the given nodes removed (labels kept).
    DynkinDiagram remove_node(int p) const;

    bool operator==(const DynkinDiagram& o) const { return cartan_.a == o.cartan_.a && n_ == o.n_; }

  private:
    int n_ = 0;
    IntMatrix cartan_;
    std::vector<std::string> labels_;
    IntVec symmetrizer_;
    mutable std::optional<Int> det_;  // computed once on demand
};

/// validate_gcm is the checked constructor from the raw matrix.
DynkinDiagram validate_gcm(const IntMatrix& m, std::vector<std::string> labels = {});

/// A diagram with a distinguished node and a numbering of its nodes.
///
/// The numbering eps is a bijection onto 1..d with eps(mark) = d. Weight
/// coordinates of two-sided weights attach to nodes through eps, so it is
/// part of the data, not a display detail.
struct MarkedDiagram {
    DynkinDiagram diagram;
    int mark = -1;              // -1 only for the unmarked result of attach_chain(md, -1)
    std::vector<int> eps;       // node -> 1..d

    MarkedDiagram() = default;
    MarkedDiagram(DynkinDiagram d, int mark_node);
    MarkedDiagram(DynkinDiagram d, int mark_node, std::vector<int> numbering);

    bool is_marked() const { return mark >= 0; }
    int node_count() const { return diagram.node_count(); }
    /// Node with eps value j (1-based).
    int node_at(int j) const;
};

/// Attaches a length-m chain of new nodes to the mark with simple edges;
/// the new mark is the far end of the chain. m = 0 returns the input,
/// m = -1 deletes the mark (result unmarked, det X(-1) of the empty diagram
/// is 1). The numbering extends the input numbering along the chain.
MarkedDiagram attach_chain(const MarkedDiagram& md, int m);

/// delta = det X - det X(-1).
Int delta(const MarkedDiagram& md);

/// det X != 0, delta != 0 and gcd(det X, delta) = 1.
bool is_extensible(const MarkedDiagram& md);

class ZkDiagram;

/// Two marked diagrams with their cached determinant data.
class MarkedPair {
  public:
    MarkedPair(MarkedDiagram x1, MarkedDiagram x2);

    const MarkedDiagram& x1() const { return x1_; }
    const MarkedDiagram& x2() const { return x2_; }
    int d1() const { return x1_.node_count(); }
    int d2() const { return x2_.node_count(); }
    const Int& det_x1() const { return det1_; }
    const Int& det_x2() const { return det2_; }
    const Int& delta1() const { return delta1_; }
    const Int& delta2() const { return delta2_; }

    bool extensible() const;
    void require_extensible() const;

    /// Closed-form det Z_k = (k-1) d1 d2 + det X1 d2 + det X2 d1
    /// (d_i the deltas).
    Int det_zk_formula(int k) const;

    /// The unique k >= 1 with det Z_k = 0, if any (extensible pairs only).
    std::optional<int> singular_k() const;

    ZkDiagram zk(int k) const;

  private:
    MarkedDiagram x1_, x2_;
    Int det1_, det2_, delta1_, delta2_;
};

/// The composite diagram: X1, a chain of k new nodes, X2, joined by simple
/// edges mark1 - 1 - 2 - ... - k - mark2. Carries the two node numberings.
class ZkDiagram {
  public:
    ZkDiagram(const MarkedPair& pair, int k);

    const DynkinDiagram& diagram() const { return diagram_; }
    int k() const { return k_; }
    int d1() const { return d1_; }
    int d2() const { return d2_; }
    int node_count() const { return diagram_.node_count(); }

    /// Numbering from the X1 side: X1 gets 1..d1 (mark = d1), the chain
    /// d1+1..d1+k, X2 the rest reversed.
    int num_i(int node) const { return num_i_[node]; }
    /// Mirror numbering from the X2 side.
    int num_ibar(int node) const { return num_ibar_[node]; }

    /// Node with num_i(node) == value, and the ibar counterpart.
    int node_by_i(int value) const { return by_i_[value - 1]; }
    int node_by_ibar(int value) const { return by_ibar_[value - 1]; }

    /// 0-based node index of chain position c (1-based, 1..k).
    int chain_node(int c) const { return d1_ + c - 1; }
    bool is_chain_node(int node) const { return node >= d1_ && node < d1_ + k_; }

  private:
    DynkinDiagram diagram_;
    int k_ = 0, d1_ = 0, d2_ = 0;
    std::vector<int> num_i_, num_ibar_, by_i_, by_ibar_;
};

}  // namespace dynkin
