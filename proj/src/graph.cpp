#include "rdalpha/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "rdalpha/errors.hpp"

namespace rdalpha {

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
    if (vertex_count < 0) {
        throw std::invalid_argument("Graph: negative vertex count");
    }
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("Graph::add_edge: endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("Graph::add_edge: loops are not allowed");
    }
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) {
        return; // already present
    }
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(adj_[v].size()); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n_;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    int r = degree(0);
    for (int v = 1; v < n_; ++v) {
        if (degree(v) != r) return std::nullopt;
    }
    return r;
}

bool Graph::is_complete() const {
    return edge_count_ == n_ * (n_ - 1) / 2;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("Graph::relabeled: permutation size mismatch");
    }
    Graph g(n_);
    for (auto [u, v] : edges()) {
        g.add_edge(perm[u], perm[v]);
    }
    return g;
}

Graph Graph::complete(int q) {
    Graph g(q);
    for (int u = 0; u < q; ++u) {
        for (int v = u + 1; v < q; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph Graph::empty_of_order(int q) { return Graph(q); }

Graph Graph::cycle(int q) {
    if (q < 3) {
        throw std::invalid_argument("Graph::cycle: need at least 3 vertices");
    }
    Graph g(q);
    for (int v = 0; v < q; ++v) g.add_edge(v, (v + 1) % q);
    return g;
}

Graph Graph::path(int q) {
    Graph g(q);
    for (int v = 0; v + 1 < q; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

bool DistanceMatrix::all_reachable() const {
    for (int v : d) {
        if (v == kUnreachable) return false;
    }
    return true;
}

void VertexPartition::validate(int n) const {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& block : blocks) {
        if (block.empty()) {
            throw std::invalid_argument("VertexPartition: empty block");
        }
        for (int v : block) {
            if (v < 0 || v >= n) {
                throw std::invalid_argument("VertexPartition: index out of range");
            }
            if (seen[v]) {
                throw std::invalid_argument("VertexPartition: blocks overlap");
            }
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) {
        throw std::invalid_argument("VertexPartition: blocks do not cover all vertices");
    }
}

VertexPartition VertexPartition::singletons(int n) {
    VertexPartition p;
    p.blocks.reserve(n);
    for (int v = 0; v < n; ++v) p.blocks.push_back({v});
    return p;
}

namespace {

void bfs_distances(const Graph& g, int source, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] == DistanceMatrix::kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
}

} // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
    std::vector<int> row(n);
    for (int s = 0; s < n; ++s) {
        bfs_distances(g, s, row);
        std::copy(row.begin(), row.end(),
                  dm.d.begin() + static_cast<std::size_t>(s) * n);
    }
    return dm;
}

SymMatrix reciprocal_distance_matrix(const Graph& g) {
    return rd_alpha_matrix(g, 0.0);
}

double reciprocal_transmission(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) {
        throw std::invalid_argument("reciprocal_transmission: vertex out of range");
    }
    std::vector<int> dist(n);
    bfs_distances(g, v, dist);
    double sum = 0.0;
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (dist[u] == DistanceMatrix::kUnreachable) {
            throw DisconnectedGraphError("reciprocal_transmission: graph is disconnected");
        }
        sum += 1.0 / dist[u];
    }
    return sum;
}

std::vector<double> reciprocal_transmissions(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> out(n);
    for (int v = 0; v < n; ++v) out[v] = reciprocal_transmission(g, v);
    return out;
}

SymMatrix rd_alpha_matrix(const Graph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw AlphaOutOfRangeError("rd_alpha_matrix: alpha must lie in [0, 1], got " +
                                   std::to_string(alpha));
    }
    const int n = g.vertex_count();
    DistanceMatrix dm = all_pairs_distances(g);
    if (!dm.all_reachable()) {
        throw DisconnectedGraphError("rd_alpha_matrix: graph is disconnected");
    }
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        double rtr = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            rtr += 1.0 / dm(i, j);
        }
        m.set(i, i, alpha * rtr);
        for (int j = i + 1; j < n; ++j) {
            m.set(i, j, (1.0 - alpha) / dm(i, j));
        }
    }
    return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    SymMatrix m(n);
    for (auto [u, v] : g.edges()) {
        m.set(u, v, 1.0);
    }
    return m;
}

bool is_equitable(const SymMatrix& m, const VertexPartition& p, double tol) {
    p.validate(m.size());
    for (const auto& bi : p.blocks) {
        for (const auto& bj : p.blocks) {
            double first = 0.0;
            bool have_first = false;
            for (int u : bi) {
                double row_sum = 0.0;
                for (int v : bj) row_sum += m(u, v);
                if (!have_first) {
                    first = row_sum;
                    have_first = true;
                } else if (std::abs(row_sum - first) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

QuotientMatrix quotient_matrix(const SymMatrix& m, const VertexPartition& p,
                               double tol) {
    p.validate(m.size());
    const int k = static_cast<int>(p.block_count());
    QuotientMatrix q(k, std::vector<double>(static_cast<std::size_t>(k) * k, 0.0),
                     is_equitable(m, p, tol));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double total = 0.0;
            for (int u : p.blocks[i]) {
                for (int v : p.blocks[j]) total += m(u, v);
            }
            q.at(i, j) = total / static_cast<double>(p.blocks[i].size());
        }
    }
    return q;
}

} // namespace rdalpha
