#include "rdalpha/joined_union.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rdalpha/errors.hpp"

namespace rdalpha {

JoinedUnionPlan::JoinedUnionPlan(Graph parent, std::vector<Graph> components)
    : parent_(std::move(parent)), components_(std::move(components)) {
    if (parent_.vertex_count() == 0) {
        throw std::invalid_argument("JoinedUnionPlan: parent must be non-empty");
    }
    if (!parent_.is_connected()) {
        throw std::invalid_argument("JoinedUnionPlan: parent must be connected");
    }
    if (static_cast<int>(components_.size()) != parent_.vertex_count()) {
        throw std::invalid_argument(
            "JoinedUnionPlan: need one component per parent vertex");
    }
    degrees_.reserve(components_.size());
    offsets_.reserve(components_.size() + 1);
    offsets_.push_back(0);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const Graph& g = components_[i];
        if (g.vertex_count() == 0) {
            throw std::invalid_argument("JoinedUnionPlan: empty component " +
                                        std::to_string(i));
        }
        auto r = g.regular_degree();
        if (!r) {
            throw NotRegularError("JoinedUnionPlan: component " +
                                  std::to_string(i) + " is not regular");
        }
        degrees_.push_back(*r);
        offsets_.push_back(offsets_.back() + g.vertex_count());
    }
}

VertexPartition JoinedUnionPlan::block_partition() const {
    VertexPartition p;
    p.blocks.reserve(components_.size());
    for (int i = 0; i < block_count(); ++i) {
        std::vector<int> block(block_size(i));
        for (int j = 0; j < block_size(i); ++j) block[j] = block_offset(i) + j;
        p.blocks.push_back(std::move(block));
    }
    return p;
}

Graph compose(const JoinedUnionPlan& plan) {
    Graph g(plan.total_order());
    for (int b = 0; b < plan.block_count(); ++b) {
        int off = plan.block_offset(b);
        for (auto [u, v] : plan.components()[b].edges()) {
            g.add_edge(off + u, off + v);
        }
    }
    for (auto [a, b] : plan.parent().edges()) {
        for (int u = plan.block_offset(a); u < plan.block_offset(a + 1); ++u) {
            for (int v = plan.block_offset(b); v < plan.block_offset(b + 1); ++v) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::vector<BlockData> block_data(const JoinedUnionPlan& plan) {
    const int n = plan.block_count();
    DistanceMatrix pd = all_pairs_distances(plan.parent());
    std::vector<BlockData> out(n);
    for (int i = 0; i < n; ++i) {
        BlockData& bd = out[i];
        bd.n = plan.block_size(i);
        bd.r = plan.block_degree(i);
        bd.m = 0.0;
        for (int t = 0; t < n; ++t) {
            if (t == i) continue;
            bd.m += static_cast<double>(plan.block_size(t)) / pd(i, t);
        }
        bd.rtr = 0.5 * (bd.n + bd.r - 1) + bd.m;
    }
    return out;
}

QuotientMatrix theorem21_quotient(const JoinedUnionPlan& plan, double alpha) {
    SymMatrix m = rd_alpha_matrix(compose(plan), alpha);
    return quotient_matrix(m, plan.block_partition());
}

Spectrum adjacency_spectrum(const Graph& g) {
    const int q = g.vertex_count();
    if (g.edge_count() == 0) {
        return Spectrum::from_entries({{0.0, q}});
    }
    if (g.is_complete()) {
        return Spectrum::from_entries({{static_cast<double>(q - 1), 1},
                                       {-1.0, q - 1}});
    }
    return sym_eigenvalues(adjacency_matrix(g));
}

Spectrum theorem21_spectrum(const JoinedUnionPlan& plan, double alpha) {
    if (plan.parent().vertex_count() < 2) {
        throw std::invalid_argument(
            "theorem21_spectrum: parent must have order >= 2");
    }
    std::vector<BlockData> bd = block_data(plan);
    std::vector<Spectrum> parts;
    parts.reserve(plan.block_count() + 1);
    for (int i = 0; i < plan.block_count(); ++i) {
        Spectrum adj = adjacency_spectrum(plan.components()[i]);
        // Drop one copy of the regular degree r_i: its eigenvector is the
        // all-ones vector, accounted for by the quotient instead.
        const auto& entries = adj.entries();
        std::size_t best_idx = 0;
        double best = std::abs(entries[0].value - bd[i].r);
        for (std::size_t e = 1; e < entries.size(); ++e) {
            double dev = std::abs(entries[e].value - bd[i].r);
            if (dev < best) {
                best = dev;
                best_idx = e;
            }
        }
        if (best > 1e-6) {
            throw std::logic_error(
                "theorem21_spectrum: regular degree missing from adjacency spectrum");
        }
        std::vector<SpectrumEntry> mapped;
        for (std::size_t e = 0; e < entries.size(); ++e) {
            int mult = entries[e].multiplicity - (e == best_idx ? 1 : 0);
            if (mult == 0) continue;
            double mu = entries[e].value;
            mapped.push_back(
                {alpha * bd[i].rtr + (1.0 - alpha) * 0.5 * (mu - 1.0), mult});
        }
        if (!mapped.empty()) parts.push_back(Spectrum::from_entries(mapped));
    }
    parts.push_back(general_eigenvalues(theorem21_quotient(plan, alpha)));
    return spectrum_union(parts);
}

Spectrum join_three_spectrum(const Graph& g1, const Graph& g2, const Graph& g3,
                             double alpha) {
    Graph parent(3);
    parent.add_edge(0, 1);
    parent.add_edge(0, 2);
    JoinedUnionPlan plan(parent, {g1, g2, g3});
    return theorem21_spectrum(plan, alpha);
}

} // namespace rdalpha
