#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/io.hpp"
#include "rdalpha/joined_union.hpp"
#include "rdalpha/spectral.hpp"

using namespace rdalpha;

namespace {

JoinedUnionPlan star_plan(Graph g1, Graph g2, Graph g3) {
    Graph parent(3);
    parent.add_edge(0, 1);
    parent.add_edge(0, 2);
    return JoinedUnionPlan(parent, {std::move(g1), std::move(g2), std::move(g3)});
}

Graph random_regular_component(std::mt19937& rng) {
    std::uniform_int_distribution<int> fam(0, 3);
    switch (fam(rng)) {
        case 0: {
            std::uniform_int_distribution<int> q(1, 6);
            return Graph::complete(q(rng));
        }
        case 1: {
            std::uniform_int_distribution<int> q(1, 6);
            return Graph::empty_of_order(q(rng));
        }
        case 2: {
            std::uniform_int_distribution<int> q(3, 6);
            return Graph::cycle(q(rng));
        }
        default: {
            std::uniform_int_distribution<int> q(3, 6);
            return Graph::cycle(q(rng)).complement();
        }
    }
}

Graph random_connected_parent(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> nd(lo, hi);
    int n = nd(rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (true) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < 0.5) g.add_edge(u, v);
        if (g.is_connected()) return g;
    }
}

} // namespace

TEST_CASE("plan validation") {
    Graph p2 = Graph::complete(2);
    CHECK_NOTHROW(JoinedUnionPlan(p2, {Graph::complete(1), Graph::complete(3)}));

    Graph not_regular = Graph::path(3);
    CHECK_THROWS_AS(JoinedUnionPlan(p2, {not_regular, Graph::complete(1)}),
                    NotRegularError);

    Graph disconnected_parent(2);
    CHECK_THROWS_AS(
        JoinedUnionPlan(disconnected_parent, {Graph::complete(1), Graph::complete(1)}),
        std::invalid_argument);

    CHECK_THROWS_AS(JoinedUnionPlan(p2, {Graph::complete(1)}),
                    std::invalid_argument);
}

TEST_CASE("compose: joins of singletons and the plain join") {
    Graph k2 = compose(JoinedUnionPlan(Graph::complete(2),
                                       {Graph::complete(1), Graph::complete(1)}));
    CHECK(k2 == Graph::complete(2));

    // K_2[G_1, G_2] is the join G_1 v G_2
    Graph g1 = Graph::cycle(4);
    Graph g2 = Graph::empty_of_order(3);
    Graph joined = compose(JoinedUnionPlan(Graph::complete(2), {g1, g2}));
    CHECK(joined.vertex_count() == 7);
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 7; ++v) CHECK(joined.has_edge(u, v));
    CHECK(joined.has_edge(0, 1));
    CHECK(!joined.has_edge(4, 5));

    // K_q over empty parts gives the complete q-partite graph
    Graph multi = compose(JoinedUnionPlan(
        Graph::complete(3), {Graph::empty_of_order(2), Graph::empty_of_order(2),
                             Graph::empty_of_order(2)}));
    CHECK(multi.edge_count() == 3 * 4); // K_{2,2,2}
    CHECK(multi.is_connected());
}

TEST_CASE("block distance law") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        Graph parent = random_connected_parent(rng, 2, 5);
        std::vector<Graph> comps;
        for (int i = 0; i < parent.vertex_count(); ++i) {
            comps.push_back(random_regular_component(rng));
        }
        JoinedUnionPlan plan(parent, comps);
        Graph composed = compose(plan);
        DistanceMatrix dc = all_pairs_distances(composed);
        DistanceMatrix dp = all_pairs_distances(parent);
        for (int bi = 0; bi < plan.block_count(); ++bi) {
            for (int u = plan.block_offset(bi); u < plan.block_offset(bi + 1); ++u) {
                for (int bj = 0; bj < plan.block_count(); ++bj) {
                    for (int w = plan.block_offset(bj); w < plan.block_offset(bj + 1);
                         ++w) {
                        if (u == w) continue;
                        if (bi == bj) {
                            CHECK(dc(u, w) == (composed.has_edge(u, w) ? 1 : 2));
                        } else {
                            CHECK(dc(u, w) == dp(bi, bj));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("block_data examples") {
    JoinedUnionPlan k2_plan(Graph::complete(2),
                            {Graph::complete(1), Graph::complete(1)});
    auto bd = block_data(k2_plan);
    CHECK(bd[0].m == doctest::Approx(1.0));
    CHECK(bd[0].rtr == doctest::Approx(1.0));

    // complete q-partite with equal empty parts: m = (q-1)n, rtr = (n-1)/2 + (q-1)n
    const int q = 4, n = 3;
    JoinedUnionPlan multi(Graph::complete(q),
                          std::vector<Graph>(q, Graph::empty_of_order(n)));
    for (const auto& b : block_data(multi)) {
        CHECK(b.m == doctest::Approx((q - 1) * n));
        CHECK(b.rtr == doctest::Approx((n - 1) / 2.0 + (q - 1) * n));
    }

    // star parent with K_1, K_2, K_2
    auto sbd = block_data(
        star_plan(Graph::complete(1), Graph::complete(2), Graph::complete(2)));
    CHECK(sbd[0].m == doctest::Approx(4.0));
    CHECK(sbd[1].m == doctest::Approx(1.0 + 2.0 / 2.0));
    CHECK(sbd[2].m == doctest::Approx(2.0));
}

TEST_CASE("rtr in block data equals reciprocal transmission on the composition") {
    // power-graph-shaped plans have parent diameter <= 2, so the two half-sums
    // agree exactly
    JoinedUnionPlan plan = star_plan(Graph::complete(3), Graph::complete(1),
                                     Graph::complete(2));
    Graph composed = compose(plan);
    auto bd = block_data(plan);
    for (int b = 0; b < plan.block_count(); ++b) {
        for (int u = plan.block_offset(b); u < plan.block_offset(b + 1); ++u) {
            CHECK(bd[b].rtr == reciprocal_transmission(composed, u));
        }
    }

    // general parents can have longer distances; allow roundoff there
    std::mt19937 rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        Graph parent = random_connected_parent(rng, 2, 6);
        std::vector<Graph> comps;
        for (int i = 0; i < parent.vertex_count(); ++i)
            comps.push_back(random_regular_component(rng));
        JoinedUnionPlan p(parent, comps);
        Graph c = compose(p);
        auto data = block_data(p);
        for (int b = 0; b < p.block_count(); ++b) {
            for (int u = p.block_offset(b); u < p.block_offset(b + 1); ++u) {
                CHECK(data[b].rtr ==
                      doctest::Approx(reciprocal_transmission(c, u)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("the block partition is equitable for RD_alpha") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 8; ++trial) {
        Graph parent = random_connected_parent(rng, 2, 5);
        std::vector<Graph> comps;
        for (int i = 0; i < parent.vertex_count(); ++i)
            comps.push_back(random_regular_component(rng));
        JoinedUnionPlan plan(parent, comps);
        Graph composed = compose(plan);
        for (double a : {0.0, 0.5, 1.0}) {
            SymMatrix m = rd_alpha_matrix(composed, a);
            CHECK(is_equitable(m, plan.block_partition(), 1e-12));
        }
    }
}

TEST_CASE("theorem21_quotient examples") {
    // K_2[K_1, K_1] at alpha 0 is the Harary matrix of K_2
    QuotientMatrix q0 = theorem21_quotient(
        JoinedUnionPlan(Graph::complete(2), {Graph::complete(1), Graph::complete(1)}),
        0.0);
    CHECK(q0(0, 0) == doctest::Approx(0.0));
    CHECK(q0(0, 1) == doctest::Approx(1.0));
    CHECK(q0(1, 0) == doctest::Approx(1.0));
    CHECK(q0.equitable);

    // equal-part complete multipartite: diagonal n(q-1)a + (n-1)/2,
    // off-diagonal (1-a)n
    const int q = 3, n = 4;
    for (double a : {0.0, 0.25, 0.75}) {
        QuotientMatrix qm = theorem21_quotient(
            JoinedUnionPlan(Graph::complete(q),
                            std::vector<Graph>(q, Graph::empty_of_order(n))),
            a);
        for (int i = 0; i < q; ++i) {
            for (int j = 0; j < q; ++j) {
                double want = i == j ? n * (q - 1) * a + (n - 1) / 2.0 : (1 - a) * n;
                CHECK(qm(i, j) == doctest::Approx(want).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("theorem21_spectrum: K_2[K_1, K_1] gives {1, 2a-1}") {
    JoinedUnionPlan plan(Graph::complete(2),
                         {Graph::complete(1), Graph::complete(1)});
    for (double a : {0.0, 0.3, 1.0}) {
        auto vals = theorem21_spectrum(plan, a).expanded();
        REQUIRE(vals.size() == 2);
        CHECK(vals[0] == doctest::Approx(1.0));
        CHECK(vals[1] == doctest::Approx(2 * a - 1).epsilon(1e-12));
    }
}

TEST_CASE("theorem21_spectrum requires a parent of order >= 2") {
    JoinedUnionPlan degenerate(Graph::complete(1), {Graph::cycle(5)});
    CHECK(compose(degenerate) == Graph::cycle(5));
    CHECK_THROWS_AS(theorem21_spectrum(degenerate, 0.5), std::invalid_argument);
}

TEST_CASE("oracle equivalence on random plans") {
    std::mt19937 rng(109);
    const double alphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int trial = 0; trial < 12; ++trial) {
        Graph parent = random_connected_parent(rng, 2, 6);
        std::vector<Graph> comps;
        for (int i = 0; i < parent.vertex_count(); ++i)
            comps.push_back(random_regular_component(rng));
        JoinedUnionPlan plan(parent, comps);
        Graph composed = compose(plan);
        for (double a : alphas) {
            Spectrum structural = theorem21_spectrum(plan, a);
            Spectrum oracle = sym_eigenvalues(rd_alpha_matrix(composed, a));
            CHECK(structural.total_multiplicity() == composed.vertex_count());
            CHECK(spectra_equal(structural, oracle, 1e-8).equal);
        }
    }
}

TEST_CASE("multiplicity accounting: blocks contribute n_i - 1 each") {
    JoinedUnionPlan plan = star_plan(Graph::complete(2), Graph::cycle(4),
                                     Graph::empty_of_order(3));
    Graph composed = compose(plan);
    Spectrum s = theorem21_spectrum(plan, 0.5);
    CHECK(s.total_multiplicity() == composed.vertex_count());
    QuotientMatrix q = theorem21_quotient(plan, 0.5);
    CHECK(q.k == plan.block_count());
    int block_part = 0;
    for (int i = 0; i < plan.block_count(); ++i) block_part += plan.block_size(i) - 1;
    CHECK(block_part + q.k == composed.vertex_count());
}

TEST_CASE("join_three_spectrum") {
    // K_1 v (K_1 u K_1) is the path P_3
    Spectrum p3 = join_three_spectrum(Graph::complete(1), Graph::complete(1),
                                      Graph::complete(1), 0.0);
    Spectrum brute = sym_eigenvalues(reciprocal_distance_matrix(Graph::path(3)));
    CHECK(spectra_equal(p3, brute, 1e-10).equal);

    // swapping the two satellite graphs leaves the multiset unchanged
    Graph g1 = Graph::complete(2);
    Graph g2 = Graph::cycle(4);
    Graph g3 = Graph::empty_of_order(2);
    for (double a : {0.0, 0.5, 1.0}) {
        Spectrum s1 = join_three_spectrum(g1, g2, g3, a);
        Spectrum s2 = join_three_spectrum(g1, g3, g2, a);
        CHECK(spectra_equal(s1, s2, 1e-10).equal);
    }

    CHECK_THROWS_AS(
        join_three_spectrum(Graph::path(3), Graph::complete(1), Graph::complete(1), 0.5),
        NotRegularError);
}

TEST_CASE("join of three complete graphs: closed-form families") {
    // K_{n1} v (K_{n2} u K_{n3}): families Na-1, (N - n3/2)a - 1, (N - n2/2)a - 1
    for (int n1 : {1, 2, 3}) {
        for (int n2 : {1, 3}) {
            for (int n3 : {2, 4}) {
                double N = n1 + n2 + n3;
                for (double a : {0.0, 0.5, 1.0}) {
                    std::vector<SpectrumEntry> fam;
                    if (n1 > 1) fam.push_back({N * a - 1, n1 - 1});
                    if (n2 > 1) fam.push_back({(N - n3 / 2.0) * a - 1, n2 - 1});
                    if (n3 > 1) fam.push_back({(N - n2 / 2.0) * a - 1, n3 - 1});
                    Spectrum got = join_three_spectrum(
                        Graph::complete(n1), Graph::complete(n2), Graph::complete(n3), a);
                    // the family part must be contained in the full spectrum
                    Spectrum families = Spectrum::from_entries(fam);
                    auto want = families.expanded();
                    auto all = got.expanded();
                    for (double w : want) {
                        int found = 0;
                        for (double v : all) {
                            if (std::abs(v - w) < 1e-8) ++found;
                        }
                        CHECK(found >= 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("adjacency_spectrum shortcuts agree with the Jacobi solver") {
    for (int q : {1, 2, 5, 9}) {
        Spectrum direct = sym_eigenvalues(adjacency_matrix(Graph::complete(q)));
        CHECK(spectra_equal(adjacency_spectrum(Graph::complete(q)), direct, 1e-10).equal);
        Spectrum empty_direct =
            sym_eigenvalues(adjacency_matrix(Graph::empty_of_order(q)));
        CHECK(spectra_equal(adjacency_spectrum(Graph::empty_of_order(q)), empty_direct,
                            1e-10)
                  .equal);
    }
    Spectrum c5 = adjacency_spectrum(Graph::cycle(5));
    CHECK(c5.entries()[0].value == doctest::Approx(2.0));
}

TEST_CASE("plan json round trip") {
    JoinedUnionPlan plan = star_plan(Graph::complete(2), Graph::cycle(4),
                                     Graph::empty_of_order(3));
    JoinedUnionPlan back = plan_from_json(plan_to_json(plan));
    CHECK(back.parent() == plan.parent());
    CHECK(back.components().size() == plan.components().size());
    for (std::size_t i = 0; i < back.components().size(); ++i) {
        CHECK(back.components()[i] == plan.components()[i]);
    }
    // a plan with a non-regular component fails as a parse error
    ordered_json bad = plan_to_json(plan);
    bad["components"][0] = graph_to_json(Graph::path(3));
    CHECK_THROWS_AS(plan_from_json(bad), ParseError);
}
