#include "rdalpha/closed_form.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rdalpha/errors.hpp"
#include "rdalpha/joined_union.hpp"

namespace rdalpha {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw AlphaOutOfRangeError("closed form: alpha must lie in [0, 1]");
    }
}

/// Eigenvalue contributed by a complete block of reciprocal transmission rtr
/// (adjacency eigenvalue -1).
double complete_block_value(double rtr, double alpha) {
    return alpha * rtr - (1.0 - alpha);
}

/// Eigenvalue contributed by an edgeless block (adjacency eigenvalue 0, with
/// within-block distance 2).
double empty_block_value(double rtr, double alpha) {
    return alpha * rtr - 0.5 * (1.0 - alpha);
}

/// Eigenvalue carried by differences of two interchangeable complete tail
/// blocks of size s at mutual distance 2.
double tail_difference_value(double rtr, int s, double alpha) {
    return alpha * rtr + (1.0 - alpha) * 0.5 * (s - 2);
}

/// Quotient of the composed RD_alpha matrix over a coarsening of the block
/// partition: each cell is a union of whole blocks.
QuotientMatrix coarse_quotient(const JoinedUnionPlan& plan, double alpha,
                               const std::vector<std::vector<int>>& cells) {
    SymMatrix m = rd_alpha_matrix(compose(plan), alpha);
    VertexPartition vp;
    vp.blocks.reserve(cells.size());
    for (const auto& cell : cells) {
        std::vector<int> vertices;
        for (int b : cell) {
            for (int v = plan.block_offset(b); v < plan.block_offset(b + 1); ++v) {
                vertices.push_back(v);
            }
        }
        vp.blocks.push_back(std::move(vertices));
    }
    return quotient_matrix(m, vp);
}

void add_value_check(std::vector<PrintedDeviation>& out, std::string label,
                     double candidate, double derived) {
    out.push_back({std::move(label), candidate, derived,
                   std::abs(candidate - derived)});
}

void add_matrix_check(std::vector<PrintedDeviation>& out,
                      const std::string& label,
                      const std::vector<double>& candidate,
                      const QuotientMatrix& derived) {
    double max_dev = 0.0;
    for (int i = 0; i < derived.k; ++i) {
        for (int j = 0; j < derived.k; ++j) {
            double c = candidate[static_cast<std::size_t>(i) * derived.k + j];
            double dev = std::abs(c - derived(i, j));
            max_dev = std::max(max_dev, dev);
            if (dev > 1e-9) {
                std::ostringstream os;
                os << label << " entry (" << i << "," << j << ")";
                add_value_check(out, os.str(), c, derived(i, j));
            }
        }
    }
    out.push_back({label + " (max entrywise deviation)", kNaN, kNaN, max_dev});
}

std::string order_block_tag(int d) {
    return "order-" + std::to_string(d) + "-block";
}

} // namespace

int ClosedFormSpectrum::total_dimension() const {
    int total = quotient.k;
    for (const auto& f : explicit_part) total += f.multiplicity;
    return total;
}

Spectrum ClosedFormSpectrum::assemble(double coalesce_tol) const {
    std::vector<Spectrum> parts;
    if (!explicit_part.empty()) {
        std::vector<SpectrumEntry> entries;
        entries.reserve(explicit_part.size());
        for (const auto& f : explicit_part) {
            entries.push_back({f.value, f.multiplicity});
        }
        parts.push_back(Spectrum::from_entries(entries, coalesce_tol));
    }
    if (quotient.k > 0) parts.push_back(general_eigenvalues(quotient));
    return spectrum_union(parts, coalesce_tol);
}

ClosedFormSpectrum cyclic_spectrum(int n, double alpha) {
    if (n < 3) throw InvalidParameterError("cyclic_spectrum: need n >= 3");
    check_alpha(alpha);
    ClosedFormSpectrum cf;

    if (is_prime_power(n)) {
        // power graph is K_n: spectrum {n-1, (n alpha - 1)^(n-1)}
        cf.explicit_part.push_back(
            {static_cast<double>(n - 1), 1, "complete-graph"});
        cf.explicit_part.push_back({n * alpha - 1.0, n - 1, "complete-graph"});
        return cf;
    }

    StructuralLayout layout = structural_layout(GroupSpec::cyclic(n));
    const JoinedUnionPlan& plan = layout.plan;
    std::vector<BlockData> bd = block_data(plan);
    DivisorGraph dg = divisor_graph(n);
    const int t = static_cast<int>(dg.divisors.size());

    cf.explicit_part.push_back({complete_block_value(bd[0].rtr, alpha),
                                static_cast<int>(euler_phi(n)),
                                "generator-block"});
    for (int i = 0; i < t; ++i) {
        int mult = static_cast<int>(euler_phi(dg.divisors[i])) - 1;
        double derived = complete_block_value(bd[1 + i].rtr, alpha);
        if (mult > 0) {
            cf.explicit_part.push_back(
                {derived, mult, order_block_tag(dg.divisors[i])});
        }
        // The candidate closed form for this family is malformed in its
        // source ("alpha -1 1"); only the derived value is usable.
        cf.printed_deviations.push_back(
            {order_block_tag(dg.divisors[i]) +
                 " family: candidate expression malformed, derived value used",
             kNaN, derived, kNaN});
    }
    cf.quotient = theorem21_quotient(plan, alpha);

    // n = p*q: candidate 3x3 quotient and family values
    if (t == 2 && is_prime(dg.divisors[0]) && is_prime(dg.divisors[1]) &&
        dg.divisors[0] * dg.divisors[1] == n) {
        const double p = dg.divisors[0];
        const double q = dg.divisors[1];
        const double phi_pq = static_cast<double>(euler_phi(n));
        add_value_check(cf.printed_deviations,
                        "cyclic(pq) generator family candidate n*a-1",
                        n * alpha - 1.0,
                        complete_block_value(bd[0].rtr, alpha));
        add_value_check(cf.printed_deviations,
                        "cyclic(pq) order-p family candidate (pq-(q-1)/2)a-1",
                        (p * q - (q - 1) / 2.0) * alpha - 1.0,
                        complete_block_value(bd[1].rtr, alpha));
        add_value_check(cf.printed_deviations,
                        "cyclic(pq) order-q family candidate (pq-(p-1)/2)a-1",
                        (p * q - (p - 1) / 2.0) * alpha - 1.0,
                        complete_block_value(bd[2].rtr, alpha));
        const double b = 1.0 - alpha;
        std::vector<double> candidate = {
            (n - 1 - phi_pq) * alpha + phi_pq, b * (p - 1), b * (q - 1),
            b * (p - 1), (p * q - p - (q - 3) / 2.0) * alpha + p - 2, b * (q - 2) / 2.0,
            b * (q - 1), b * (p - 2) / 2.0, (p * q - q - (p - 3) / 2.0) * alpha + q - 2};
        add_matrix_check(cf.printed_deviations, "cyclic(pq) candidate quotient",
                         candidate, cf.quotient);
    }
    return cf;
}

ClosedFormSpectrum dihedral_spectrum(int n, double alpha) {
    if (n < 3) throw InvalidParameterError("dihedral_spectrum: need n >= 3");
    check_alpha(alpha);
    ClosedFormSpectrum cf;
    StructuralLayout layout = structural_layout(GroupSpec::dihedral(n));
    const JoinedUnionPlan& plan = layout.plan;
    std::vector<BlockData> bd = block_data(plan);

    if (is_prime_power(n)) {
        // blocks [K_1, K_{n-1}, ~K_n]
        double rotation = complete_block_value(bd[1].rtr, alpha);
        double reflection = empty_block_value(bd[2].rtr, alpha);
        if (n - 2 > 0) {
            cf.explicit_part.push_back({rotation, n - 2, "rotation-block"});
        }
        cf.explicit_part.push_back({reflection, n - 1, "reflection-block"});
        cf.quotient = theorem21_quotient(plan, alpha);

        add_value_check(cf.printed_deviations,
                        "dihedral reflection family candidate (n+1)a-1",
                        (n + 1) * alpha - 1.0, reflection);
        add_value_check(cf.printed_deviations,
                        "dihedral reflection family candidate (n+1/2)a-1/2",
                        (n + 0.5) * alpha - 0.5, reflection);
        const double b = 1.0 - alpha;
        std::vector<double> candidate = {
            (2 * n - 1) * alpha, b * (n - 1), b * n,
            b, (n / 2.0 + 1) * alpha + n - 2, b * n / 2.0,
            b, b * (n - 1) / 2.0, alpha + n - 1.0};
        add_matrix_check(cf.printed_deviations,
                         "dihedral(p^m) candidate quotient", candidate,
                         cf.quotient);
        return cf;
    }

    DivisorGraph dg = divisor_graph(n);
    const int t = static_cast<int>(dg.divisors.size());
    DistanceMatrix pd = all_pairs_distances(plan.parent());

    int phi_n = static_cast<int>(euler_phi(n));
    if (phi_n - 1 > 0) {
        cf.explicit_part.push_back({complete_block_value(bd[1].rtr, alpha),
                                    phi_n - 1, "generator-block"});
    }
    for (int i = 0; i < t; ++i) {
        int mult = static_cast<int>(euler_phi(dg.divisors[i])) - 1;
        double derived = complete_block_value(bd[2 + i].rtr, alpha);
        if (mult > 0) {
            cf.explicit_part.push_back(
                {derived, mult, order_block_tag(dg.divisors[i])});
        }
        // candidate family value with the unweighted divisor-distance sum
        double unweighted = 0.0;
        for (int k = 0; k < t; ++k) {
            if (k == i) continue;
            unweighted += 1.0 / pd(2 + i, 2 + k);
        }
        double candidate =
            (phi_n + euler_phi(dg.divisors[i]) + unweighted + n / 2.0 + 1.0) *
                alpha -
            1.0;
        add_value_check(cf.printed_deviations,
                        "dihedral " + order_block_tag(dg.divisors[i]) +
                            " family candidate (unweighted divisor sum)",
                        candidate, derived);
    }
    double reflection = empty_block_value(bd[t + 2].rtr, alpha);
    cf.explicit_part.push_back({reflection, n - 1, "reflection-block"});
    add_value_check(cf.printed_deviations,
                    "dihedral reflection family candidate (n+1)a-1",
                    (n + 1) * alpha - 1.0, reflection);
    add_value_check(cf.printed_deviations,
                    "dihedral reflection family candidate (n+1/2)a-1/2",
                    (n + 0.5) * alpha - 0.5, reflection);
    cf.quotient = theorem21_quotient(plan, alpha);
    return cf;
}

ClosedFormSpectrum quaternion_spectrum(int n, double alpha) {
    if (n < 2) throw InvalidParameterError("quaternion_spectrum: need n >= 2");
    check_alpha(alpha);
    ClosedFormSpectrum cf;
    StructuralLayout layout = structural_layout(GroupSpec::quaternion(n));
    const JoinedUnionPlan& plan = layout.plan;
    std::vector<BlockData> bd = block_data(plan);

    long long p2 = 0;
    int m2 = 0;
    const bool two_power = is_prime_power(n, &p2, &m2) && p2 == 2;

    if (two_power) {
        // blocks [K_2, K_{2n-2}, K_2 x n]
        double hub = complete_block_value(bd[0].rtr, alpha);
        double middle = complete_block_value(bd[1].rtr, alpha);
        double pair = complete_block_value(bd[2].rtr, alpha);
        double pair_diff = tail_difference_value(bd[2].rtr, 2, alpha);
        cf.explicit_part.push_back({hub, 1, "hub-block"});
        cf.explicit_part.push_back({middle, 2 * n - 3, "rotation-block"});
        cf.explicit_part.push_back({pair, n, "pair-block"});
        if (n - 1 > 0) {
            cf.explicit_part.push_back({pair_diff, n - 1, "pair-difference"});
        }
        std::vector<std::vector<int>> cells{{0}, {1}};
        std::vector<int> tail(n);
        for (int k = 0; k < n; ++k) tail[k] = 2 + k;
        cells.push_back(std::move(tail));
        cf.quotient = coarse_quotient(plan, alpha, cells);

        add_value_check(cf.printed_deviations,
                        "quaternion(2^k) hub family candidate 4na-1",
                        4 * n * alpha - 1.0, hub);
        add_value_check(cf.printed_deviations,
                        "quaternion(2^k) rotation family candidate 3na-1",
                        3 * n * alpha - 1.0, middle);
        add_value_check(cf.printed_deviations,
                        "quaternion(2^k) pair family candidate 2(n+1)a-1",
                        2 * (n + 1) * alpha - 1.0, pair);
        add_value_check(cf.printed_deviations,
                        "quaternion(2^k) pair-difference candidate (2n+1)a",
                        (2 * n + 1) * alpha, pair_diff);
        const double b = 1.0 - alpha;
        std::vector<double> candidate = {
            (4 * n - 2) * alpha + 1, 2 * (n - 1) * b, 2 * n * b,
            2 * b, (n + 2) * alpha + 2 * n - 3, n * b,
            2 * b, (n - 1) * b, (n + 1) * alpha + n};
        add_matrix_check(cf.printed_deviations,
                         "quaternion(2^k) candidate quotient", candidate,
                         cf.quotient);
        return cf;
    }

    // blocks [K_1, K_1, K_phi(2n), order-d blocks, K_2 x n]
    const int nn = 2 * n;
    std::vector<int> divisors;
    for (int d : proper_divisors(nn)) {
        if (d != 2) divisors.push_back(d);
    }
    const int t = static_cast<int>(divisors.size());
    DistanceMatrix pd = all_pairs_distances(plan.parent());

    int phi_2n = static_cast<int>(euler_phi(nn));
    if (phi_2n - 1 > 0) {
        cf.explicit_part.push_back({complete_block_value(bd[2].rtr, alpha),
                                    phi_2n - 1, "generator-block"});
    }
    for (int i = 0; i < t; ++i) {
        int mult = static_cast<int>(euler_phi(divisors[i])) - 1;
        double derived = complete_block_value(bd[3 + i].rtr, alpha);
        if (mult > 0) {
            cf.explicit_part.push_back({derived, mult, order_block_tag(divisors[i])});
        }
        double unweighted = 0.0;
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            unweighted += 1.0 / pd(3 + i, 3 + j);
        }
        double candidate = (phi_2n + euler_phi(divisors[i]) + n +
                            1.0 / pd(3 + i, 1) + unweighted + 1.0) *
                               alpha +
                           1.0;
        add_value_check(cf.printed_deviations,
                        "quaternion " + order_block_tag(divisors[i]) +
                            " family candidate ((...+1)a+1, unweighted sum)",
                        candidate, derived);
    }
    double pair = complete_block_value(bd[3 + t].rtr, alpha);
    double pair_diff = tail_difference_value(bd[3 + t].rtr, 2, alpha);
    cf.explicit_part.push_back({pair, n, "pair-block"});
    cf.explicit_part.push_back({pair_diff, n - 1, "pair-difference"});
    add_value_check(cf.printed_deviations,
                    "quaternion pair family candidate multiplicity n-1",
                    static_cast<double>(n - 1), static_cast<double>(n));
    add_value_check(cf.printed_deviations,
                    "quaternion pair-difference candidate multiplicity n",
                    static_cast<double>(n), static_cast<double>(n - 1));

    std::vector<std::vector<int>> cells;
    for (int bdx = 0; bdx < 3 + t; ++bdx) cells.push_back({bdx});
    std::vector<int> tail(n);
    for (int k = 0; k < n; ++k) tail[k] = 3 + t + k;
    cells.push_back(std::move(tail));
    cf.quotient = coarse_quotient(plan, alpha, cells);
    return cf;
}

ClosedFormSpectrum elementary_abelian_spectrum(int p, int k, double alpha) {
    if (!is_prime(p)) {
        throw InvalidParameterError("elementary_abelian_spectrum: p must be prime");
    }
    if (k < 1) throw InvalidParameterError("elementary_abelian_spectrum: need k >= 1");
    check_alpha(alpha);
    ClosedFormSpectrum cf;
    StructuralLayout layout =
        structural_layout(GroupSpec::elementary_abelian(p, k));
    const JoinedUnionPlan& plan = layout.plan;
    std::vector<BlockData> bd = block_data(plan);
    const int l = plan.block_count() - 1;

    double block_value = complete_block_value(bd[1].rtr, alpha);
    double diff_value = tail_difference_value(bd[1].rtr, p - 1, alpha);
    if (l * (p - 2) > 0) {
        cf.explicit_part.push_back({block_value, l * (p - 2), "subgroup-block"});
    }
    if (l - 1 > 0) {
        cf.explicit_part.push_back({diff_value, l - 1, "subgroup-difference"});
    }
    std::vector<std::vector<int>> cells{{0}};
    std::vector<int> tail(l);
    for (int i = 0; i < l; ++i) tail[i] = 1 + i;
    cells.push_back(std::move(tail));
    cf.quotient = coarse_quotient(plan, alpha, cells);

    add_value_check(cf.printed_deviations,
                    "elemab subgroup family candidate ((p-1)(l+1)/2+1)a-1",
                    ((p - 1) * (l + 1) / 2.0 + 1.0) * alpha - 1.0, block_value);
    add_value_check(
        cf.printed_deviations,
        "elemab subgroup-difference candidate ((2pl+p-2l+1)/2)a+(p-1)/2",
        (2.0 * p * l + p - 2.0 * l + 1.0) / 2.0 * alpha + (p - 1) / 2.0,
        diff_value);
    const double b = 1.0 - alpha;
    std::vector<double> candidate = {
        l * (p - 1.0) * alpha, b * (p - 1.0) * (l - 1.0),
        b, (p * static_cast<double>(l) + p - l + 1.0) / 2.0 * alpha +
               (p - 1.0) * (l - 1.0) / 2.0};
    add_matrix_check(cf.printed_deviations, "elemab candidate quotient",
                     candidate, cf.quotient);
    return cf;
}

ClosedFormSpectrum nonabelian_pq_spectrum(int p, int q, double alpha) {
    if (!is_prime(p) || !is_prime(q) || p >= q || (q - 1) % p != 0) {
        throw InvalidParameterError(
            "nonabelian_pq_spectrum: need primes p < q with q = 1 (mod p)");
    }
    check_alpha(alpha);
    ClosedFormSpectrum cf;
    StructuralLayout layout = structural_layout(GroupSpec::nonabelian_pq(p, q));
    const JoinedUnionPlan& plan = layout.plan;
    std::vector<BlockData> bd = block_data(plan);

    // blocks [K_1, K_{p-1} x q, K_{q-1}]
    double p_block = complete_block_value(bd[1].rtr, alpha);
    double q_block = complete_block_value(bd[1 + q].rtr, alpha);
    double p_diff = tail_difference_value(bd[1].rtr, p - 1, alpha);
    if (q * (p - 2) > 0) {
        cf.explicit_part.push_back({p_block, q * (p - 2), "order-p-block"});
    }
    if (q - 2 > 0) {
        cf.explicit_part.push_back({q_block, q - 2, "order-q-block"});
    }
    cf.explicit_part.push_back({p_diff, q - 1, "order-p-difference"});

    std::vector<std::vector<int>> cells{{0}};
    std::vector<int> tail(q);
    for (int i = 0; i < q; ++i) tail[i] = 1 + i;
    cells.push_back(std::move(tail));
    cells.push_back({1 + q});
    cf.quotient = coarse_quotient(plan, alpha, cells);

    add_value_check(cf.printed_deviations,
                    "pq order-p family candidate ((pq+p+1)/2)a-1",
                    (p * static_cast<double>(q) + p + 1.0) / 2.0 * alpha - 1.0,
                    p_block);
    add_value_check(cf.printed_deviations,
                    "pq order-q family candidate ((p+1)q/2)a-1",
                    (p + 1.0) * q / 2.0 * alpha - 1.0, q_block);
    add_value_check(cf.printed_deviations,
                    "pq order-p-difference candidate ((pq+2)/2)a+(p-3)/2",
                    (p * static_cast<double>(q) + 2.0) / 2.0 * alpha +
                        (p - 3.0) / 2.0,
                    p_diff);
    const double b = 1.0 - alpha;
    std::vector<double> candidate = {
        (p * static_cast<double>(q) - 1.0) * alpha, b * (p - 1.0) * (q - 1.0),
        b * (q - 1.0),
        b, (q + 2.0) / 2.0 * alpha + (p - 1.0) * (q - 1.0) / 2.0,
        b * (q - 1.0) / 2.0,
        b, q * b * (p - 1.0) / 2.0,
        (p * static_cast<double>(q) - q + 2.0) / 2.0 * alpha + q - 2.0};
    add_matrix_check(cf.printed_deviations, "pq candidate quotient", candidate,
                     cf.quotient);
    return cf;
}

ClosedFormSpectrum closed_form_spectrum(const GroupSpec& spec, double alpha) {
    switch (spec.family) {
        case GroupSpec::Family::Cyclic: return cyclic_spectrum(spec.a, alpha);
        case GroupSpec::Family::Dihedral: return dihedral_spectrum(spec.a, alpha);
        case GroupSpec::Family::GeneralizedQuaternion:
            return quaternion_spectrum(spec.a, alpha);
        case GroupSpec::Family::ElementaryAbelian:
            return elementary_abelian_spectrum(spec.a, spec.b, alpha);
        case GroupSpec::Family::NonabelianPQ:
            return nonabelian_pq_spectrum(spec.a, spec.b, alpha);
    }
    throw InvalidParameterError("closed_form_spectrum: unknown family");
}

} // namespace rdalpha
