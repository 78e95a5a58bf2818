#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/spectral.hpp"

using namespace rdalpha;

namespace {

SymMatrix diag3(double a, double b, double c) {
    SymMatrix m(3);
    m.set(0, 0, a);
    m.set(1, 1, b);
    m.set(2, 2, c);
    return m;
}

SymMatrix random_symmetric(std::mt19937& rng, int n, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, u(rng));
    return m;
}

} // namespace

TEST_CASE("spectrum construction coalesces and sorts descending") {
    Spectrum s = Spectrum::from_values({1.0, 3.0, 1.0 + 1e-9, 3.0, -2.0});
    REQUIRE(s.entries().size() == 3);
    CHECK(s.entries()[0].value == doctest::Approx(3.0));
    CHECK(s.entries()[0].multiplicity == 2);
    CHECK(s.entries()[1].multiplicity == 2);
    CHECK(s.entries()[2].value == doctest::Approx(-2.0));
    CHECK(s.total_multiplicity() == 5);

    Spectrum split = Spectrum::from_values({0.0, 1e-3}, 1e-7);
    CHECK(split.entries().size() == 2);
}

TEST_CASE("sym_eigenvalues on known matrices") {
    Spectrum d = sym_eigenvalues(diag3(3, 1, 1));
    REQUIRE(d.entries().size() == 2);
    CHECK(d.entries()[0].value == doctest::Approx(3.0));
    CHECK(d.entries()[1].value == doctest::Approx(1.0));
    CHECK(d.entries()[1].multiplicity == 2);

    // RD(K_n) = J - I has spectrum {n-1, (-1)^(n-1)}
    for (int n : {2, 3, 6, 11}) {
        Spectrum s = sym_eigenvalues(reciprocal_distance_matrix(Graph::complete(n)));
        REQUIRE(s.entries().size() == 2);
        CHECK(s.entries()[0].value == doctest::Approx(n - 1.0).epsilon(1e-12));
        CHECK(s.entries()[0].multiplicity == 1);
        CHECK(s.entries()[1].value == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(s.entries()[1].multiplicity == n - 1);
    }

    // RD_0.5(K_3) = 0.5 (J + I): spectrum {2, 0.5^2}
    Spectrum k3 = sym_eigenvalues(rd_alpha_matrix(Graph::complete(3), 0.5));
    REQUIRE(k3.entries().size() == 2);
    CHECK(k3.entries()[0].value == doctest::Approx(2.0));
    CHECK(k3.entries()[1].value == doctest::Approx(0.5));
    CHECK(k3.entries()[1].multiplicity == 2);

    CHECK(sym_eigenvalues(SymMatrix(0)).empty());
}

TEST_CASE("sym_eigenvalues throws NoConvergence when the budget is zero") {
    SymMatrix m(2);
    m.set(0, 0, 1.0);
    m.set(0, 1, 0.5);
    CHECK_THROWS_AS(sym_eigenvalues(m, kJacobiTol, 0), NoConvergenceError);
    // an already-diagonal matrix needs no sweeps at all
    CHECK_NOTHROW(sym_eigenvalues(diag3(1, 2, 3), kJacobiTol, 0));
}

TEST_CASE("eigenvalue sum equals trace and squares match Frobenius norm") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> nd(1, 24);
        int n = nd(rng);
        SymMatrix m = random_symmetric(rng, n, 5.0);
        std::vector<double> eig = jacobi_eigenvalues(m);
        double sum = std::accumulate(eig.begin(), eig.end(), 0.0);
        double sq = 0.0;
        for (double v : eig) sq += v * v;
        double scale = std::max(1.0, m.max_abs());
        CHECK(std::abs(sum - m.trace()) < 1e-8 * n * scale);
        CHECK(sq == doctest::Approx(m.frobenius_norm() * m.frobenius_norm())
                        .epsilon(1e-10));
    }
}

TEST_CASE("spectrum is invariant under vertex relabeling") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> nd(2, 12);
        int n = nd(rng);
        Graph g = Graph::path(n);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 2; v < n; ++v)
                if (coin(rng) < 0.35) g.add_edge(u, v);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (double a : {0.0, 0.5}) {
            Spectrum s1 = sym_eigenvalues(rd_alpha_matrix(g, a));
            Spectrum s2 = sym_eigenvalues(rd_alpha_matrix(g.relabeled(perm), a));
            CHECK(spectra_equal(s1, s2, 1e-9).equal);
        }
    }
}

TEST_CASE("general_eigenvalues on small matrices") {
    Spectrum one = general_eigenvalues(QuotientMatrix(1, {42.0}, true));
    REQUIRE(one.entries().size() == 1);
    CHECK(one.entries()[0].value == doctest::Approx(42.0));

    Spectrum two = general_eigenvalues(QuotientMatrix(2, {0, 2, 2, 0}, true));
    REQUIRE(two.entries().size() == 2);
    CHECK(two.entries()[0].value == doctest::Approx(2.0));
    CHECK(two.entries()[1].value == doctest::Approx(-2.0));

    CHECK(general_eigenvalues(QuotientMatrix()).empty());

    // companion matrix of (x-1)(x-2)(x-3)
    Spectrum comp = general_eigenvalues(
        QuotientMatrix(3, {6, -11, 6, 1, 0, 0, 0, 1, 0}, false));
    auto vals = comp.expanded();
    REQUIRE(vals.size() == 3);
    CHECK(vals[0] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(vals[1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(vals[2] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("general_eigenvalues flags complex spectra of equitable quotients") {
    QuotientMatrix rotation(2, {0, -1, 1, 0}, true);
    CHECK_THROWS_AS(general_eigenvalues(rotation), ComplexSpectrumError);
    QuotientMatrix unflagged(2, {0, -1, 1, 0}, false);
    Spectrum s = general_eigenvalues(unflagged); // real parts, no error
    CHECK(s.total_multiplicity() == 2);
    CHECK(s.entries()[0].value == doctest::Approx(0.0));
}

TEST_CASE("real_matrix_eigenvalues matches Jacobi on random symmetric input") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> nd(2, 12);
        int n = nd(rng);
        SymMatrix m = random_symmetric(rng, n, 3.0);
        auto qr = real_matrix_eigenvalues(m.data(), n);
        std::vector<double> re;
        for (auto z : qr) {
            CHECK(std::abs(z.imag()) < 1e-9);
            re.push_back(z.real());
        }
        Spectrum via_qr = Spectrum::from_values(re);
        Spectrum via_jacobi = sym_eigenvalues(m);
        auto rep = spectra_equal(via_qr, via_jacobi, 1e-8);
        CHECK(rep.equal);
    }
}

TEST_CASE("real_matrix_eigenvalues handles badly scaled matrices via balancing") {
    // diag(1e6, 1, 1e-6) similarity of a fixed matrix keeps eigenvalues {1,2,3}
    std::vector<double> a = {
        1.0, 2e6, 0.0,
        0.5e-6, 2.0, 1e6,
        0.0, 0.25e-6, 3.0};
    auto eig = real_matrix_eigenvalues(a, 3);
    std::vector<double> re;
    for (auto z : eig) re.push_back(z.real());
    std::sort(re.begin(), re.end());
    // eigenvalues of [[1,2,0],[0.5,2,1],[0,0.25,3]]
    std::vector<double> want = {0.3550274585313, 2.3528598198605, 3.2921127216083};
    for (int i = 0; i < 3; ++i) CHECK(re[i] == doctest::Approx(want[i]).epsilon(1e-8));
}

TEST_CASE("spectra_equal verdicts and reports") {
    Spectrum a = Spectrum::from_entries({{1.0, 2}, {0.0, 1}});
    Spectrum b = Spectrum::from_entries({{1.0000000001, 2}, {0.0, 1}});
    CHECK(spectra_equal(a, b, 1e-8).equal);

    Spectrum c = Spectrum::from_entries({{1.0, 1}});
    Spectrum d = Spectrum::from_entries({{1.0, 2}});
    MatchReport r = spectra_equal(c, d, 1e-8);
    CHECK(!r.equal);
    CHECK(r.unmatched_b.size() == 1);

    Spectrum e = Spectrum::from_values({2.0, 0.5, 0.5});
    Spectrum f = Spectrum::from_values({2.0, 0.5, 0.49});
    MatchReport r2 = spectra_equal(e, f, 1e-8);
    CHECK(!r2.equal);
    CHECK(r2.max_deviation == doctest::Approx(0.01));
}

TEST_CASE("spectrum_union") {
    Spectrum a = Spectrum::from_values({1.0});
    CHECK(spectrum_union({a, a}).entries()[0].multiplicity == 2);
    CHECK(spectrum_union({Spectrum{}, a}).total_multiplicity() == 1);
    Spectrum b = Spectrum::from_entries({{2.0, 1}});
    Spectrum c = Spectrum::from_entries({{0.5, 2}});
    Spectrum u = spectrum_union({b, c});
    REQUIRE(u.entries().size() == 2);
    CHECK(u.entries()[0].value == doctest::Approx(2.0));
    CHECK(u.entries()[1].multiplicity == 2);
}

TEST_CASE("quotient eigenvalues interlace: within [min, max] of full spectrum") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        // joined-union style matrix with an equitable two-block partition
        Graph g(6);
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) g.add_edge(u, v);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        std::uniform_real_distribution<double> ad(0.0, 1.0);
        double a = ad(rng);
        SymMatrix m = rd_alpha_matrix(g, a);
        VertexPartition p{{{0, 1, 2}, {3, 4, 5}}};
        QuotientMatrix q = quotient_matrix(m, p);
        REQUIRE(q.equitable);
        auto full = sym_eigenvalues(m).expanded();
        double lo = full.back(), hi = full.front();
        for (const auto& e : general_eigenvalues(q).entries()) {
            CHECK(e.value >= lo - 1e-9);
            CHECK(e.value <= hi + 1e-9);
        }
    }
}

TEST_CASE("P(Z_6) quotient roots complete the brute-force Harary spectrum") {
    // blocks: identity+generators (K_3), order-2 (K_1), order-3 (K_2)
    Graph g(6);
    auto add_clique_edges = [&](std::vector<int> vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                g.add_edge(vs[i], vs[j]);
    };
    add_clique_edges({0, 1, 2});      // {0, 1, 5} of Z_6 relabeled
    add_clique_edges({4, 5});         // order-3 elements
    for (int v = 3; v < 6; ++v)       // hub joins
        for (int u = 0; u < 3; ++u) g.add_edge(u, v);
    SymMatrix rd = reciprocal_distance_matrix(g);
    VertexPartition p{{{0, 1, 2}, {3}, {4, 5}}};
    QuotientMatrix q = quotient_matrix(rd, p);
    REQUIRE(q.equitable);
    Spectrum quotient_part = general_eigenvalues(q);
    // block families contribute -1 with multiplicity 3 at alpha = 0
    Spectrum assembled =
        spectrum_union({quotient_part, Spectrum::from_entries({{-1.0, 3}})});
    CHECK(spectra_equal(assembled, sym_eigenvalues(rd), 1e-8).equal);
}
