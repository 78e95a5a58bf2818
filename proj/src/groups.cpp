#include "rdalpha/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rdalpha/errors.hpp"

namespace rdalpha {

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> factors;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

} // namespace

long long euler_phi(long long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long long phi = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

bool is_prime_power(long long n, long long* p, int* m) {
    if (n < 2) return false;
    auto factors = factorize(n);
    if (factors.size() != 1) return false;
    if (p) *p = factors[0].first;
    if (m) *m = factors[0].second;
    return true;
}

std::vector<int> proper_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d < n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

DivisorGraph divisor_graph(int n) {
    if (n < 2) throw std::invalid_argument("divisor_graph: n must be >= 2");
    DivisorGraph dg;
    dg.n = n;
    dg.divisors = proper_divisors(n);
    const int t = static_cast<int>(dg.divisors.size());
    dg.graph = Graph(t);
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            if (dg.divisors[j] % dg.divisors[i] == 0) dg.graph.add_edge(i, j);
        }
    }
    dg.connected = t > 0 ? dg.graph.is_connected() : false;
    return dg;
}

int GroupSpec::group_order() const {
    switch (family) {
        case Family::Cyclic: return a;
        case Family::Dihedral: return 2 * a;
        case Family::GeneralizedQuaternion: return 4 * a;
        case Family::ElementaryAbelian: {
            int order = 1;
            for (int i = 0; i < b; ++i) order *= a;
            return order;
        }
        case Family::NonabelianPQ: return a * b;
    }
    return 0;
}

void GroupSpec::validate() const {
    switch (family) {
        case Family::Cyclic:
            if (a < 3) throw InvalidSpecError("cyclic: need n >= 3");
            return;
        case Family::Dihedral:
            if (a < 2) throw InvalidSpecError("dihedral: need n >= 2");
            return;
        case Family::GeneralizedQuaternion:
            if (a < 2) throw InvalidSpecError("quaternion: need n >= 2");
            return;
        case Family::ElementaryAbelian:
            if (!is_prime(a)) throw InvalidSpecError("elemab: p must be prime");
            if (b < 1) throw InvalidSpecError("elemab: need k >= 1");
            if (group_order() > 100000) {
                throw InvalidSpecError("elemab: group order too large");
            }
            return;
        case Family::NonabelianPQ:
            if (!is_prime(a) || !is_prime(b)) {
                throw InvalidSpecError("pq: p and q must be prime");
            }
            if (a >= b) throw InvalidSpecError("pq: need p < q");
            if ((b - 1) % a != 0) {
                throw InvalidSpecError(
                    "pq: need q = 1 (mod p) for a non-abelian group to exist");
            }
            return;
    }
    throw InvalidSpecError("unknown family");
}

GroupSpec GroupSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParseError("group spec '" + text + "': expected family:params");
    }
    std::string family = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int value;
        try {
            value = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw ParseError("group spec '" + text + "': bad integer '" + s + "'");
        }
        if (pos != s.size()) {
            throw ParseError("group spec '" + text + "': bad integer '" + s + "'");
        }
        return value;
    };
    GroupSpec spec;
    auto comma = params.find(',');
    if (family == "cyclic" || family == "dihedral" || family == "quaternion") {
        if (comma != std::string::npos) {
            throw ParseError("group spec '" + text + "': one parameter expected");
        }
        spec.a = parse_int(params);
        spec.family = family == "cyclic" ? Family::Cyclic
                      : family == "dihedral" ? Family::Dihedral
                                             : Family::GeneralizedQuaternion;
    } else if (family == "elemab" || family == "pq") {
        if (comma == std::string::npos) {
            throw ParseError("group spec '" + text + "': two parameters expected");
        }
        spec.a = parse_int(params.substr(0, comma));
        spec.b = parse_int(params.substr(comma + 1));
        spec.family = family == "elemab" ? Family::ElementaryAbelian
                                         : Family::NonabelianPQ;
    } else {
        throw ParseError("group spec '" + text + "': unknown family '" + family +
                         "'");
    }
    spec.validate();
    return spec;
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    switch (family) {
        case Family::Cyclic: os << "cyclic:" << a; break;
        case Family::Dihedral: os << "dihedral:" << a; break;
        case Family::GeneralizedQuaternion: os << "quaternion:" << a; break;
        case Family::ElementaryAbelian: os << "elemab:" << a << "," << b; break;
        case Family::NonabelianPQ: os << "pq:" << a << "," << b; break;
    }
    return os.str();
}

namespace {

/// Builds orders, cyclic subgroups, and the power graph from a multiplication
/// rule over elements encoded as 0..order-1 with 0 the identity.
std::pair<Graph, GroupElements> power_graph_from_mult(
    int order, const std::function<int(int, int)>& mult) {
    GroupElements ge;
    ge.size = order;
    ge.order_of.resize(order);
    ge.power_closure.resize(order);
    for (int x = 0; x < order; ++x) {
        std::vector<int> closure;
        int y = x;
        do {
            closure.push_back(y);
            y = mult(y, x);
        } while (y != x);
        ge.order_of[x] = static_cast<int>(closure.size());
        std::sort(closure.begin(), closure.end());
        ge.power_closure[x] = std::move(closure);
    }
    Graph g(order);
    for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) {
            bool u_in_v = std::binary_search(ge.power_closure[v].begin(),
                                             ge.power_closure[v].end(), u);
            bool v_in_u = std::binary_search(ge.power_closure[u].begin(),
                                             ge.power_closure[u].end(), v);
            if (u_in_v || v_in_u) g.add_edge(u, v);
        }
    }
    return {std::move(g), std::move(ge)};
}

int mod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

int pq_action_unit(int p, int q) {
    for (int u = 2; u < q; ++u) {
        // multiplicative order of u mod q must be exactly p
        long long pw = u % q;
        int ord = 1;
        while (pw != 1) {
            pw = (pw * u) % q;
            ++ord;
        }
        if (ord == p) return u;
    }
    throw InvalidSpecError("pq: no unit of order p mod q exists");
}

std::pair<Graph, GroupElements> nonabelian_pq_power_graph(int p, int q,
                                                          int unit) {
    // element (a, b) with a in Z_q, b in Z_p encoded as b*q + a;
    // (a1,b1)(a2,b2) = (a1 + u^b1 a2 mod q, b1 + b2 mod p)
    std::vector<long long> upow(p);
    upow[0] = 1;
    for (int i = 1; i < p; ++i) upow[i] = (upow[i - 1] * unit) % q;
    auto mult = [p, q, &upow](int x, int y) {
        int a1 = x % q, b1 = x / q;
        int a2 = y % q, b2 = y / q;
        int a = static_cast<int>((a1 + upow[b1] * a2) % q);
        int b = (b1 + b2) % p;
        return b * q + a;
    };
    return power_graph_from_mult(p * q, mult);
}

std::pair<Graph, GroupElements> cayley_power_graph(const GroupSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case GroupSpec::Family::Cyclic: {
            int n = spec.a;
            return power_graph_from_mult(n,
                                         [n](int x, int y) { return (x + y) % n; });
        }
        case GroupSpec::Family::Dihedral: {
            // r^i s^f encoded as f*n + i
            int n = spec.a;
            auto mult = [n](int x, int y) {
                int i = x % n, f = x / n;
                int j = y % n, g = y / n;
                if (f == 0) return g * n + mod(i + j, n);
                return ((f + g) % 2) * n + mod(i - j, n);
            };
            return power_graph_from_mult(2 * n, mult);
        }
        case GroupSpec::Family::GeneralizedQuaternion: {
            // r^i s^f encoded as f*2n + i, with s^2 = r^n and s r^j = r^-j s
            int n = spec.a;
            int nn = 2 * n;
            auto mult = [n, nn](int x, int y) {
                int i = x % nn, f = x / nn;
                int j = y % nn, g = y / nn;
                if (f == 0) return g * nn + mod(i + j, nn);
                if (g == 0) return nn + mod(i - j, nn);
                return mod(i - j + n, nn);
            };
            return power_graph_from_mult(4 * n, mult);
        }
        case GroupSpec::Family::ElementaryAbelian: {
            // base-p digit vectors of length k under componentwise addition
            int p = spec.a, k = spec.b;
            int order = spec.group_order();
            auto mult = [p, k](int x, int y) {
                int out = 0, place = 1;
                for (int d = 0; d < k; ++d) {
                    out += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                return out;
            };
            return power_graph_from_mult(order, mult);
        }
        case GroupSpec::Family::NonabelianPQ:
            return nonabelian_pq_power_graph(spec.a, spec.b,
                                             pq_action_unit(spec.a, spec.b));
    }
    throw InvalidSpecError("unknown family");
}

namespace {

StructuralLayout make_layout(Graph parent, std::vector<Graph> components,
                             std::vector<std::vector<int>> block_elements) {
    return {JoinedUnionPlan(std::move(parent), std::move(components)),
            std::move(block_elements)};
}

/// Elements of each order in a cyclic subgroup <r> of the given order,
/// encoded as exponents. Element r^i has order n / gcd(i, n).
std::vector<int> exponents_of_order(int n, int d) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (n / std::gcd(i, n) == d) out.push_back(i);
    }
    return out;
}

StructuralLayout cyclic_layout(const GroupSpec& spec) {
    const int n = spec.a;
    if (is_prime_power(n)) {
        throw DegenerateDecompositionError(
            "cyclic:" + std::to_string(n) +
                ": power graph is the complete graph K_n",
            n);
    }
    DivisorGraph dg = divisor_graph(n);
    const int t = static_cast<int>(dg.divisors.size());
    // parent: hub (identity + generators) adjacent to every divisor vertex,
    // divisor vertices adjacent by divisibility
    Graph parent(t + 1);
    for (int i = 0; i < t; ++i) parent.add_edge(0, 1 + i);
    for (auto [u, v] : dg.graph.edges()) parent.add_edge(1 + u, 1 + v);

    std::vector<Graph> components;
    std::vector<std::vector<int>> elements;
    components.push_back(Graph::complete(static_cast<int>(euler_phi(n)) + 1));
    std::vector<int> hub = exponents_of_order(n, 1);
    for (int e : exponents_of_order(n, n)) hub.push_back(e);
    std::sort(hub.begin(), hub.end());
    elements.push_back(std::move(hub));
    for (int d : dg.divisors) {
        components.push_back(Graph::complete(static_cast<int>(euler_phi(d))));
        elements.push_back(exponents_of_order(n, d));
    }
    return make_layout(std::move(parent), std::move(components),
                       std::move(elements));
}

StructuralLayout dihedral_layout(const GroupSpec& spec) {
    const int n = spec.a;
    std::vector<int> reflections(n);
    for (int i = 0; i < n; ++i) reflections[i] = n + i;

    if (is_prime_power(n)) {
        // divisor blocks merge with the generators: P(D_2n) = K_12[K_1, K_n-1, ~K_n]
        Graph parent(3);
        parent.add_edge(0, 1);
        parent.add_edge(0, 2);
        std::vector<int> rotations(n - 1);
        std::iota(rotations.begin(), rotations.end(), 1);
        return make_layout(
            std::move(parent),
            {Graph::complete(1), Graph::complete(n - 1), Graph::empty_of_order(n)},
            {{0}, std::move(rotations), std::move(reflections)});
    }

    DivisorGraph dg = divisor_graph(n);
    const int t = static_cast<int>(dg.divisors.size());
    // blocks: 0 identity, 1 generators, 2..t+1 divisors ascending, t+2 reflections
    Graph parent(t + 3);
    for (int v = 1; v < t + 3; ++v) parent.add_edge(0, v);
    for (int i = 0; i < t; ++i) parent.add_edge(1, 2 + i);
    for (auto [u, v] : dg.graph.edges()) parent.add_edge(2 + u, 2 + v);

    std::vector<Graph> components;
    std::vector<std::vector<int>> elements;
    components.push_back(Graph::complete(1));
    elements.push_back({0});
    components.push_back(Graph::complete(static_cast<int>(euler_phi(n))));
    elements.push_back(exponents_of_order(n, n));
    for (int d : dg.divisors) {
        components.push_back(Graph::complete(static_cast<int>(euler_phi(d))));
        elements.push_back(exponents_of_order(n, d));
    }
    components.push_back(Graph::empty_of_order(n));
    elements.push_back(std::move(reflections));
    return make_layout(std::move(parent), std::move(components),
                       std::move(elements));
}

StructuralLayout quaternion_layout(const GroupSpec& spec) {
    const int n = spec.a;
    const int nn = 2 * n;

    // y pairs {r^k s, r^(k+n) s} for 0 <= k < n, encoded as nn + i
    std::vector<std::vector<int>> pairs(n);
    for (int k = 0; k < n; ++k) pairs[k] = {nn + k, nn + k + n};

    long long p2 = 0;
    int m2 = 0;
    if (is_prime_power(n, &p2, &m2) && p2 == 2) {
        // every divisor block is even, so {e, r^n} becomes a universal K_2 hub:
        // P(Q_4n) = K_1,n+1[K_2, K_2n-2, K_2, ..., K_2]
        Graph parent(n + 2);
        for (int v = 1; v < n + 2; ++v) parent.add_edge(0, v);
        std::vector<Graph> components{Graph::complete(2), Graph::complete(nn - 2)};
        std::vector<std::vector<int>> elements;
        elements.push_back({0, n});
        std::vector<int> rest;
        for (int i = 1; i < nn; ++i) {
            if (i != n) rest.push_back(i);
        }
        elements.push_back(std::move(rest));
        for (int k = 0; k < n; ++k) {
            components.push_back(Graph::complete(2));
            elements.push_back(pairs[k]);
        }
        return make_layout(std::move(parent), std::move(components),
                           std::move(elements));
    }

    std::vector<int> divisors;
    for (int d : proper_divisors(nn)) {
        if (d != 2) divisors.push_back(d);
    }
    const int t = static_cast<int>(divisors.size());
    // parent vertices: 0 identity, 1 r^n, 2 generators of <r>,
    // 3..t+2 divisor blocks, t+3..t+2+n the K_2 pairs
    Graph parent(t + n + 3);
    for (int v = 1; v < t + n + 3; ++v) parent.add_edge(0, v);
    parent.add_edge(1, 2);
    for (int k = 0; k < n; ++k) parent.add_edge(1, t + 3 + k);
    for (int i = 0; i < t; ++i) {
        if (divisors[i] % 2 == 0) parent.add_edge(1, 3 + i);
        parent.add_edge(2, 3 + i);
        for (int j = i + 1; j < t; ++j) {
            if (divisors[j] % divisors[i] == 0) parent.add_edge(3 + i, 3 + j);
        }
    }

    std::vector<Graph> components{Graph::complete(1), Graph::complete(1),
                                  Graph::complete(static_cast<int>(euler_phi(nn)))};
    std::vector<std::vector<int>> elements;
    elements.push_back({0});
    elements.push_back({n});
    elements.push_back(exponents_of_order(nn, nn));
    for (int d : divisors) {
        components.push_back(Graph::complete(static_cast<int>(euler_phi(d))));
        elements.push_back(exponents_of_order(nn, d));
    }
    for (int k = 0; k < n; ++k) {
        components.push_back(Graph::complete(2));
        elements.push_back(pairs[k]);
    }
    return make_layout(std::move(parent), std::move(components),
                       std::move(elements));
}

StructuralLayout elementary_abelian_layout(const GroupSpec& spec) {
    const int p = spec.a;
    const int order = spec.group_order();
    const int l = (order - 1) / (p - 1);

    // group the non-identity elements into the l cyclic subgroups
    auto [graph, ge] = cayley_power_graph(spec);
    (void)graph;
    std::map<std::vector<int>, std::vector<int>> subgroups;
    for (int x = 1; x < order; ++x) {
        subgroups[ge.power_closure[x]].push_back(x);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [closure, members] : subgroups) {
        blocks.push_back(members); // already ascending
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (static_cast<int>(blocks.size()) != l) {
        throw std::logic_error("elemab: expected (p^k-1)/(p-1) cyclic subgroups");
    }

    Graph parent = Graph::star(l);
    std::vector<Graph> components{Graph::complete(1)};
    std::vector<std::vector<int>> elements{{0}};
    for (auto& block : blocks) {
        components.push_back(Graph::complete(p - 1));
        elements.push_back(std::move(block));
    }
    return make_layout(std::move(parent), std::move(components),
                       std::move(elements));
}

StructuralLayout nonabelian_pq_layout(const GroupSpec& spec) {
    const int p = spec.a;
    const int q = spec.b;
    auto [graph, ge] = cayley_power_graph(spec);
    (void)graph;

    std::map<std::vector<int>, std::vector<int>> p_subgroups;
    std::vector<int> order_q;
    for (int x = 1; x < p * q; ++x) {
        if (ge.order_of[x] == p) {
            p_subgroups[ge.power_closure[x]].push_back(x);
        } else if (ge.order_of[x] == q) {
            order_q.push_back(x);
        } else {
            throw std::logic_error("pq: element of unexpected order");
        }
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [closure, members] : p_subgroups) blocks.push_back(members);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (static_cast<int>(blocks.size()) != q) {
        throw std::logic_error("pq: expected q subgroups of order p");
    }

    Graph parent = Graph::star(q + 1);
    std::vector<Graph> components{Graph::complete(1)};
    std::vector<std::vector<int>> elements{{0}};
    for (auto& block : blocks) {
        components.push_back(Graph::complete(p - 1));
        elements.push_back(std::move(block));
    }
    components.push_back(Graph::complete(q - 1));
    elements.push_back(std::move(order_q));
    return make_layout(std::move(parent), std::move(components),
                       std::move(elements));
}

} // namespace

StructuralLayout structural_layout(const GroupSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case GroupSpec::Family::Cyclic: return cyclic_layout(spec);
        case GroupSpec::Family::Dihedral: return dihedral_layout(spec);
        case GroupSpec::Family::GeneralizedQuaternion:
            return quaternion_layout(spec);
        case GroupSpec::Family::ElementaryAbelian:
            return elementary_abelian_layout(spec);
        case GroupSpec::Family::NonabelianPQ: return nonabelian_pq_layout(spec);
    }
    throw InvalidSpecError("unknown family");
}

JoinedUnionPlan structural_power_graph(const GroupSpec& spec) {
    return structural_layout(spec).plan;
}

IsomorphismReport verify_decomposition(const GroupSpec& spec) {
    IsomorphismReport report;
    auto [cayley, ge] = cayley_power_graph(spec);
    (void)ge;

    StructuralLayout layout = [&]() -> StructuralLayout {
        try {
            return structural_layout(spec);
        } catch (const DegenerateDecompositionError&) {
            report.degenerate_complete = true;
            return StructuralLayout{
                JoinedUnionPlan(Graph::complete(1),
                                {Graph::complete(cayley.vertex_count())}),
                {[&] {
                    std::vector<int> all(cayley.vertex_count());
                    std::iota(all.begin(), all.end(), 0);
                    return all;
                }()}};
        }
    }();

    Graph composed = compose(layout.plan);
    if (composed.vertex_count() != cayley.vertex_count()) {
        report.isomorphic = false;
        report.detail = "order mismatch: composed " +
                        std::to_string(composed.vertex_count()) + " vs group " +
                        std::to_string(cayley.vertex_count());
        return report;
    }

    // element index -> composed vertex index
    std::vector<int> image(cayley.vertex_count(), -1);
    for (int b = 0; b < layout.plan.block_count(); ++b) {
        const auto& members = layout.block_elements[b];
        if (static_cast<int>(members.size()) != layout.plan.block_size(b)) {
            report.isomorphic = false;
            report.detail = "block " + std::to_string(b) + " holds " +
                            std::to_string(members.size()) + " elements, expected " +
                            std::to_string(layout.plan.block_size(b));
            return report;
        }
        for (std::size_t slot = 0; slot < members.size(); ++slot) {
            image[members[slot]] =
                layout.plan.block_offset(b) + static_cast<int>(slot);
        }
    }
    for (int x = 0; x < cayley.vertex_count(); ++x) {
        if (image[x] < 0) {
            report.isomorphic = false;
            report.detail = "element " + std::to_string(x) + " not assigned";
            return report;
        }
    }

    for (int x = 0; x < cayley.vertex_count(); ++x) {
        for (int y = x + 1; y < cayley.vertex_count(); ++y) {
            bool in_group = cayley.has_edge(x, y);
            bool in_plan = composed.has_edge(image[x], image[y]);
            if (in_group != in_plan) {
                report.isomorphic = false;
                report.detail = "adjacency mismatch at elements (" +
                                std::to_string(x) + ", " + std::to_string(y) +
                                "): power graph " + (in_group ? "yes" : "no") +
                                ", decomposition " + (in_plan ? "yes" : "no");
                return report;
            }
        }
    }
    report.isomorphic = true;
    return report;
}

} // namespace rdalpha
