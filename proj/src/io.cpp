#include "rdalpha/io.hpp"

#include <fstream>
#include <sstream>

#include "rdalpha/errors.hpp"

namespace rdalpha {

Graph read_edge_list(std::istream& in) {
    std::string line;
    bool have_n = false;
    int n = 0;
    Graph g;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_n) {
            if (!(ls >> n)) {
                std::string leftover;
                if (ls.clear(), ls >> leftover) {
                    throw ParseError("edge list line " + std::to_string(line_no) +
                                     ": expected vertex count");
                }
                continue; // blank or comment-only line before the header
            }
            if (n < 0) {
                throw ParseError("edge list: negative vertex count");
            }
            std::string extra;
            if (ls >> extra) {
                throw ParseError("edge list line " + std::to_string(line_no) +
                                 ": trailing tokens after vertex count");
            }
            g = Graph(n);
            have_n = true;
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) {
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected 'u v' pair");
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": trailing tokens after edge");
        }
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw ParseError("edge list line " + std::to_string(line_no) + ": " +
                             e.what());
        }
    }
    if (!have_n) throw ParseError("edge list: missing vertex count");
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

ordered_json spectrum_to_json(const Spectrum& s) {
    ordered_json values = ordered_json::array();
    for (const auto& e : s.entries()) {
        values.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    }
    return ordered_json{{"eigenvalues", std::move(values)}, {"trace", s.sum()}};
}

ordered_json graph_to_json(const Graph& g) {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return ordered_json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ParseError("graph JSON: expected {\"n\":..., \"edges\":[...]}");
    }
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("graph JSON: each edge must be a [u, v] pair");
        }
        try {
            g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        } catch (const std::invalid_argument& ex) {
            throw ParseError(std::string("graph JSON: ") + ex.what());
        }
    }
    return g;
}

ordered_json plan_to_json(const JoinedUnionPlan& plan) {
    ordered_json comps = ordered_json::array();
    for (const auto& c : plan.components()) comps.push_back(graph_to_json(c));
    return ordered_json{{"parent", graph_to_json(plan.parent())},
                        {"components", std::move(comps)}};
}

JoinedUnionPlan plan_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("parent") || !j.contains("components")) {
        throw ParseError(
            "plan JSON: expected {\"parent\":..., \"components\":[...]}");
    }
    Graph parent = graph_from_json(j.at("parent"));
    std::vector<Graph> components;
    for (const auto& c : j.at("components")) {
        components.push_back(graph_from_json(c));
    }
    try {
        return JoinedUnionPlan(std::move(parent), std::move(components));
    } catch (const NotRegularError& ex) {
        throw ParseError(std::string("plan JSON: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("plan JSON: ") + ex.what());
    }
}

JoinedUnionPlan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open plan file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("plan JSON parse failure: " + std::string(ex.what()));
    }
    return plan_from_json(j);
}

ordered_json quotient_to_json(const QuotientMatrix& q) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < q.k; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < q.k; ++j) row.push_back(q(i, j));
        rows.push_back(std::move(row));
    }
    return ordered_json{{"k", q.k}, {"entries", std::move(rows)},
                        {"equitable", q.equitable}};
}

} // namespace rdalpha
