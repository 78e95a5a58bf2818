#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rdalpha/graph.hpp"
#include "rdalpha/joined_union.hpp"
#include "rdalpha/matrix.hpp"
#include "rdalpha/spectral.hpp"

namespace rdalpha {

using ordered_json = nlohmann::ordered_json;

/// Edge-list text format: first line the vertex count, then one "u v" pair
/// per line, 0-based, whitespace-separated; '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);
std::string write_edge_list(const Graph& g);

/// {"eigenvalues":[{"value":x,"multiplicity":m},...],"trace":t}
ordered_json spectrum_to_json(const Spectrum& s);

/// {"n":k,"edges":[[u,v],...]}
ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

/// {"parent":<graph>,"components":[<graph>,...]}
ordered_json plan_to_json(const JoinedUnionPlan& plan);
JoinedUnionPlan plan_from_json(const ordered_json& j);
JoinedUnionPlan load_plan(const std::string& path);

ordered_json quotient_to_json(const QuotientMatrix& q);

} // namespace rdalpha
