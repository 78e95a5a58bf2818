#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/io.hpp"
#include "rdalpha/spectral.hpp"

using namespace rdalpha;

TEST_CASE("graph construction rejects loops and bad indices") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    g.add_edge(0, 1);
    g.add_edge(1, 0); // duplicate, ignored
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("all_pairs_distances on small graphs") {
    DistanceMatrix d3 = all_pairs_distances(Graph::path(3));
    CHECK(d3(0, 2) == 2);
    CHECK(d3(2, 0) == 2);
    CHECK(d3(1, 1) == 0);

    DistanceMatrix k4 = all_pairs_distances(Graph::complete(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k4(i, j) == (i == j ? 0 : 1));

    DistanceMatrix star = all_pairs_distances(Graph::star(3));
    CHECK(star(1, 2) == 2);
    CHECK(star(0, 3) == 1);

    Graph two(2); // no edges
    DistanceMatrix d2 = all_pairs_distances(two);
    CHECK(d2(0, 1) == DistanceMatrix::kUnreachable);
    CHECK(!d2.all_reachable());
}

TEST_CASE("distance matrix satisfies the triangle inequality") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> nd(2, 9);
        int n = nd(rng);
        Graph g(n);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < 0.4) g.add_edge(u, v);
        DistanceMatrix d = all_pairs_distances(g);
        for (int i = 0; i < n; ++i) {
            CHECK(d(i, i) == 0);
            for (int j = 0; j < n; ++j) {
                CHECK(d(i, j) == d(j, i));
                for (int k = 0; k < n; ++k) {
                    if (d(i, j) < 0 || d(j, k) < 0 || d(i, k) < 0) continue;
                    CHECK(d(i, k) <= d(i, j) + d(j, k));
                }
            }
        }
    }
}

TEST_CASE("reciprocal distance matrix entries") {
    SymMatrix k2 = reciprocal_distance_matrix(Graph::complete(2));
    CHECK(k2(0, 1) == 1.0);
    CHECK(k2(0, 0) == 0.0);

    SymMatrix p3 = reciprocal_distance_matrix(Graph::path(3));
    CHECK(p3(0, 1) == 1.0);
    CHECK(p3(1, 2) == 1.0);
    CHECK(p3(0, 2) == 0.5);

    Graph disc(2);
    CHECK_THROWS_AS(reciprocal_distance_matrix(disc), DisconnectedGraphError);
}

TEST_CASE("reciprocal transmission values") {
    for (int n : {2, 3, 5, 8}) {
        CHECK(reciprocal_transmission(Graph::complete(n), 0) ==
              doctest::Approx(n - 1).epsilon(1e-14));
    }
    CHECK(reciprocal_transmission(Graph::path(3), 1) == doctest::Approx(2.0));
    CHECK(reciprocal_transmission(Graph::path(3), 0) == doctest::Approx(1.5));
    // 5-cycle: two neighbors plus two vertices at distance 2
    CHECK(reciprocal_transmission(Graph::cycle(5), 0) == doctest::Approx(3.0));
    Graph disc(3);
    disc.add_edge(0, 1);
    CHECK_THROWS_AS(reciprocal_transmission(disc, 0), DisconnectedGraphError);
}

TEST_CASE("rd_alpha endpoints are exact") {
    Graph g = Graph::cycle(5);
    SymMatrix rd = rd_alpha_matrix(g, 0.0);
    SymMatrix harary = reciprocal_distance_matrix(g);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(rd(i, j) == harary(i, j));

    SymMatrix diag = rd_alpha_matrix(g, 1.0);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            if (i == j) {
                CHECK(diag(i, i) == reciprocal_transmission(g, i));
            } else {
                CHECK(diag(i, j) == 0.0);
            }
        }
    }

    SymMatrix k2 = rd_alpha_matrix(Graph::complete(2), 1.0);
    CHECK(k2(0, 0) == 1.0);
    CHECK(k2(1, 1) == 1.0);

    CHECK_THROWS_AS(rd_alpha_matrix(g, -0.1), AlphaOutOfRangeError);
    CHECK_THROWS_AS(rd_alpha_matrix(g, 1.1), AlphaOutOfRangeError);
    Graph disc(4);
    disc.add_edge(0, 1);
    disc.add_edge(2, 3);
    CHECK_THROWS_AS(rd_alpha_matrix(disc, 0.5), DisconnectedGraphError);
}

TEST_CASE("trace identity: trace(RD_alpha) = alpha * sum of transmissions") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<int> nd(2, 10);
        int n = nd(rng);
        Graph g = Graph::path(n); // connected spine
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 2; v < n; ++v)
                if (coin(rng) < 0.3) g.add_edge(u, v);
        std::vector<double> rtr = reciprocal_transmissions(g);
        double total = 0.0;
        for (double v : rtr) total += v;
        SymMatrix rd = reciprocal_distance_matrix(g);
        double off_sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off_sum += rd(i, j);
        CHECK(total == doctest::Approx(2.0 * off_sum).epsilon(1e-12));
        for (double a : {0.0, 0.3, 1.0}) {
            CHECK(rd_alpha_matrix(g, a).trace() ==
                  doctest::Approx(a * total).epsilon(1e-12));
        }
    }
}

TEST_CASE("is_equitable") {
    SymMatrix k4 = rd_alpha_matrix(Graph::complete(4), 0.25);
    CHECK(is_equitable(k4, VertexPartition{{{0, 1}, {2, 3}}}));

    SymMatrix p3 = reciprocal_distance_matrix(Graph::path(3));
    CHECK(is_equitable(p3, VertexPartition::singletons(3)));
    // rows 0 and 1 have different sums into {2}: 1/2 vs 1
    CHECK(!is_equitable(p3, VertexPartition{{{0, 1}, {2}}}));

    // single-block partition equitable iff reciprocal transmission regular
    VertexPartition whole{{{0, 1, 2}}};
    CHECK(is_equitable(reciprocal_distance_matrix(Graph::complete(3)), whole));
    CHECK(!is_equitable(p3, whole));

    CHECK_THROWS_AS(is_equitable(p3, VertexPartition{{{0}, {1}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_equitable(p3, VertexPartition{{{0, 1}, {1, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("quotient_matrix") {
    // complete graph over one block: total row sum n-1 regardless of alpha
    for (double a : {0.0, 0.5, 1.0}) {
        SymMatrix m = rd_alpha_matrix(Graph::complete(5), a);
        VertexPartition one{{{0, 1, 2, 3, 4}}};
        QuotientMatrix q = quotient_matrix(m, one);
        CHECK(q.k == 1);
        CHECK(q.equitable);
        CHECK(q(0, 0) == doctest::Approx(4.0).epsilon(1e-14));
    }

    // K_{2,2}: sides {0,1} vs {2,3}, within-side distance 2
    Graph k22(4);
    k22.add_edge(0, 2);
    k22.add_edge(0, 3);
    k22.add_edge(1, 2);
    k22.add_edge(1, 3);
    QuotientMatrix q = quotient_matrix(reciprocal_distance_matrix(k22),
                                       VertexPartition{{{0, 1}, {2, 3}}});
    CHECK(q(0, 0) == doctest::Approx(0.5));
    CHECK(q(0, 1) == doctest::Approx(2.0));
    CHECK(q(1, 0) == doctest::Approx(2.0));
    CHECK(q(1, 1) == doctest::Approx(0.5));
    CHECK(q.equitable);

    // singleton blocks reproduce the matrix
    SymMatrix p3 = reciprocal_distance_matrix(Graph::path(3));
    QuotientMatrix qs = quotient_matrix(p3, VertexPartition::singletons(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(qs(i, j) == p3(i, j));
}

TEST_CASE("equitable quotient eigenvalues are matrix eigenvalues") {
    // vertex-transitive examples at a few alphas
    for (double a : {0.0, 0.5, 1.0}) {
        SymMatrix m = rd_alpha_matrix(Graph::cycle(6), a);
        VertexPartition p{{{0, 3}, {1, 4}, {2, 5}}};
        QuotientMatrix q = quotient_matrix(m, p);
        REQUIRE(q.equitable);
        auto full = sym_eigenvalues(m).expanded();
        for (const auto& e : general_eigenvalues(q).entries()) {
            bool found = false;
            for (double f : full) found = found || std::abs(f - e.value) < 1e-7;
            CHECK(found);
        }
    }
}

TEST_CASE("edge list round trip and errors") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    Graph back = parse_edge_list(write_edge_list(g));
    CHECK(back == g);

    Graph commented = parse_edge_list("# a comment\n3\n0 1 # inline\n\n1 2\n");
    CHECK(commented.vertex_count() == 3);
    CHECK(commented.edge_count() == 2);

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n1 1\n"), ParseError);
}

TEST_CASE("graph json round trip") {
    Graph g = Graph::cycle(5);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK_THROWS_AS(graph_from_json(ordered_json{{"n", 2}}), ParseError);
}
