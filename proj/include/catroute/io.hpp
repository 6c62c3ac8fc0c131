#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "catroute/bounds.hpp"
#include "catroute/category_system.hpp"
#include "catroute/graph.hpp"

namespace catroute {

/// Malformed or structurally invalid input document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph: {"n": <int>, "edges": [[u, v], ...]} with u < v, lexicographic order.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// GraphSpec: {"family": "...", "parameters": {"name": <int>, ...}, "seed": <int>}
nlohmann::json to_json(const GraphSpec& spec);
GraphSpec graph_spec_from_json(const nlohmann::json& j);

// CategorySystem: {"categories": [[v, ...], ...]}; n comes from the companion graph.
nlohmann::json to_json(const CategorySystem& sys);
CategorySystem category_system_from_json(const nlohmann::json& j, std::size_t n);

nlohmann::json to_json(const GoodnessReport& report);
nlohmann::json to_json(const RoutingReport& report);
nlohmann::json to_json(const BoundsReport& report);
nlohmann::json to_json(const SearchResult& result);

/// Header `s,t,route_len,dist,stretch`, one row per delivered pair.
void write_routing_csv(std::ostream& out, const RoutingReport& report);

/// Header `bound_name,value`; certified bounds, then indicative, then
/// `achieved` when present.
void write_bounds_csv(std::ostream& out, const BoundsReport& report);

/// Undirected DOT graph with vertex ids as labels; members of the
/// highlighted category are filled.
void write_dot(std::ostream& out, const Graph& g, const CategorySystem* sys = nullptr,
               std::optional<std::size_t> highlight_category = std::nullopt);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace catroute
