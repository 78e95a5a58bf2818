#pragma once

#include <vector>

#include "rdalpha/graph.hpp"
#include "rdalpha/matrix.hpp"
#include "rdalpha/spectral.hpp"

namespace rdalpha {

/// Blueprint for a joined union: a connected parent graph whose i-th vertex
/// is replaced by a regular component graph, with complete joins across
/// parent edges. Regularity of every component is checked at construction.
class JoinedUnionPlan {
public:
    JoinedUnionPlan(Graph parent, std::vector<Graph> components);

    const Graph& parent() const { return parent_; }
    const std::vector<Graph>& components() const { return components_; }

    int block_count() const { return static_cast<int>(components_.size()); }
    int total_order() const { return offsets_.back(); }
    int block_offset(int i) const { return offsets_[i]; }
    int block_size(int i) const { return components_[i].vertex_count(); }
    int block_degree(int i) const { return degrees_[i]; }

    VertexPartition block_partition() const;

private:
    Graph parent_;
    std::vector<Graph> components_;
    std::vector<int> degrees_;
    std::vector<int> offsets_; // prefix sums, size block_count() + 1
};

/// Per-block bookkeeping: m = sum over other blocks of n_t / d_parent, and
/// rtr = (n_i + r_i - 1)/2 + m_i, the reciprocal transmission shared by every
/// vertex of the block (valid for parents of order >= 2).
struct BlockData {
    int n = 0;
    int r = 0;
    double m = 0.0;
    double rtr = 0.0;
};

/// Disjoint union of the components plus complete bipartite joins across
/// parent edges.
Graph compose(const JoinedUnionPlan& plan);

std::vector<BlockData> block_data(const JoinedUnionPlan& plan);

/// Average-row-sum quotient of rd_alpha_matrix(compose(plan), alpha) over the
/// block partition. The partition is always equitable for joined unions of
/// regular graphs, so by the equitable-quotient property its eigenvalues are
/// eigenvalues of the full matrix.
QuotientMatrix theorem21_quotient(const JoinedUnionPlan& plan, double alpha);

/// Full RD_alpha spectrum assembled structurally: each block contributes
/// alpha*rtr_i + (1-alpha)*(mu-1)/2 for every adjacency eigenvalue mu of the
/// component except one copy of mu = r_i, and the quotient contributes the
/// rest. Requires a parent of order >= 2 (the within-block distance-2 rule
/// needs a neighboring block).
Spectrum theorem21_spectrum(const JoinedUnionPlan& plan, double alpha);

/// Spectrum of g1 v (g2 u g3): the joined union over the 3-vertex star with
/// g1 at the center.
Spectrum join_three_spectrum(const Graph& g1, const Graph& g2, const Graph& g3,
                             double alpha);

/// Adjacency spectrum of a component. Complete and edgeless graphs use their
/// known spectra {q-1, (-1)^(q-1)} and {0^q}; everything else goes through
/// the Jacobi solver.
Spectrum adjacency_spectrum(const Graph& g);

} // namespace rdalpha
