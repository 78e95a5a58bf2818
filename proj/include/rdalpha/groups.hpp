#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rdalpha/graph.hpp"
#include "rdalpha/joined_union.hpp"

namespace rdalpha {

/// Tagged description of a finite group from one of the five supported
/// families. Parameters are validated by validate() / the factories.
struct GroupSpec {
    enum class Family {
        Cyclic,               // Z_n, n >= 3
        Dihedral,             // D_2n = <r, s | r^n = s^2 = 1, rs = sr^-1>, n >= 2
        GeneralizedQuaternion,// Q_4n = <r, s | r^2n = 1, s^2 = r^n, s^-1 r s = r^-1>, n >= 2
        ElementaryAbelian,    // (Z_p)^k, p prime, k >= 1
        NonabelianPQ,         // Z_q x| Z_p, p < q primes, q = 1 (mod p)
    };

    Family family = Family::Cyclic;
    int a = 0; // n, or p for the two-parameter families
    int b = 0; // k or q for the two-parameter families

    int group_order() const;
    /// Throws InvalidSpecError on bad parameters.
    void validate() const;

    /// Accepts "cyclic:12", "dihedral:6", "quaternion:3", "elemab:3,2",
    /// "pq:3,7". Throws ParseError / InvalidSpecError.
    static GroupSpec parse(const std::string& text);
    std::string to_string() const;

    static GroupSpec cyclic(int n) { return {Family::Cyclic, n, 0}; }
    static GroupSpec dihedral(int n) { return {Family::Dihedral, n, 0}; }
    static GroupSpec quaternion(int n) {
        return {Family::GeneralizedQuaternion, n, 0};
    }
    static GroupSpec elementary_abelian(int p, int k) {
        return {Family::ElementaryAbelian, p, k};
    }
    static GroupSpec nonabelian_pq(int p, int q) {
        return {Family::NonabelianPQ, p, q};
    }
};

/// Element orders and cyclic-subgroup membership, indexed by the family's
/// canonical integer encoding of elements. Index 0 is always the identity.
struct GroupElements {
    int size = 0;
    std::vector<int> order_of;
    std::vector<std::vector<int>> power_closure; // <x> as a sorted index list
};

/// Graph on the proper divisors of n (1 < d < n, ascending) with adjacency
/// given by divisibility.
struct DivisorGraph {
    int n = 0;
    std::vector<int> divisors;
    Graph graph;
    bool connected = false;
};

long long euler_phi(long long n);
bool is_prime(long long n);
/// If n = p^m for a prime p (m >= 1), fills p and m and returns true.
bool is_prime_power(long long n, long long* p = nullptr, int* m = nullptr);
std::vector<int> proper_divisors(int n);

DivisorGraph divisor_graph(int n);

/// Power graph from explicit group elements: x ~ y iff one lies in the
/// cyclic subgroup generated by the other.
std::pair<Graph, GroupElements> cayley_power_graph(const GroupSpec& spec);

/// Same construction for Z_q x| Z_p with an explicit action unit; exposed so
/// the independence of the power graph from the choice of unit is testable.
std::pair<Graph, GroupElements> nonabelian_pq_power_graph(int p, int q,
                                                          int unit);

/// Smallest unit of multiplicative order p modulo q.
int pq_action_unit(int p, int q);

/// The joined-union decomposition of the power graph together with the group
/// elements assigned to each block (in slot order).
struct StructuralLayout {
    JoinedUnionPlan plan;
    std::vector<std::vector<int>> block_elements;
};

/// The power-graph decomposition of the given group as a joined-union plan,
/// with a fixed block order (identity block, generator block, divisor blocks
/// ascending, tail blocks). Cyclic groups of prime-power order collapse to a
/// complete graph and raise DegenerateDecompositionError instead.
JoinedUnionPlan structural_power_graph(const GroupSpec& spec);
StructuralLayout structural_layout(const GroupSpec& spec);

struct IsomorphismReport {
    bool isomorphic = false;
    bool degenerate_complete = false; // checked against K_n, not a plan
    std::string detail;               // first mismatch, when any
};

/// Checks the explicit order-based vertex bijection between the group-built
/// power graph and the composed structural plan, edge by edge.
IsomorphismReport verify_decomposition(const GroupSpec& spec);

} // namespace rdalpha
