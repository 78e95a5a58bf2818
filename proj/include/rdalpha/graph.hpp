#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rdalpha/matrix.hpp"

namespace rdalpha {

/// Undirected simple graph on dense 0-based vertex indices. No loops, no
/// multi-edges; add_edge is idempotent.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;

    /// Common degree if the graph is regular, nullopt otherwise.
    std::optional<int> regular_degree() const;

    bool is_complete() const;

    Graph complement() const;

    /// Image under a vertex permutation: vertex v maps to perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    static Graph complete(int q);
    static Graph empty_of_order(int q);
    static Graph cycle(int q);
    static Graph path(int q);
    static Graph star(int leaves);

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

/// Hop distances from BFS; kUnreachable marks pairs in different components.
struct DistanceMatrix {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> d; // row-major

    int operator()(int i, int j) const {
        return d[static_cast<std::size_t>(i) * n + j];
    }
    bool all_reachable() const;
};

/// Ordered list of disjoint vertex-index blocks covering {0, ..., n-1}.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t block_count() const { return blocks.size(); }
    /// Throws std::invalid_argument unless blocks are non-empty, disjoint,
    /// and cover exactly {0, ..., n-1}.
    void validate(int n) const;

    static VertexPartition singletons(int n);
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Harary matrix: entry (i,j) = 1/d(i,j) off the diagonal, 0 on it.
/// Throws DisconnectedGraphError if any pair is unreachable.
SymMatrix reciprocal_distance_matrix(const Graph& g);

/// Row sum of the Harary matrix at v.
double reciprocal_transmission(const Graph& g, int v);

/// Every vertex's reciprocal transmission in one pass.
std::vector<double> reciprocal_transmissions(const Graph& g);

/// alpha * RT_r(G) + (1 - alpha) * RD(G). Exact at the endpoints: alpha = 0
/// yields the Harary matrix entrywise, alpha = 1 the transmission diagonal.
SymMatrix rd_alpha_matrix(const Graph& g, double alpha);

SymMatrix adjacency_matrix(const Graph& g);

constexpr double kEquitableTol = 1e-9;

/// True iff within every block pair all row sums of the sub-block agree
/// within tol.
bool is_equitable(const SymMatrix& m, const VertexPartition& p,
                  double tol = kEquitableTol);

/// Average-row-sum quotient; the equitable flag is set via is_equitable at
/// the same tol.
QuotientMatrix quotient_matrix(const SymMatrix& m, const VertexPartition& p,
                               double tol = kEquitableTol);

} // namespace rdalpha
