#include "catroute/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace catroute {

using nlohmann::json;

namespace {

std::string format_real(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << x;
    return out.str();
}

template <class T>
T field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + name + "': " + e.what());
    }
}

}  // namespace

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    const auto n = field<std::size_t>(j, "n");
    const auto raw = field<std::vector<std::vector<std::size_t>>>(j, "edges");
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        if (e.size() != 2) throw ParseError("every edge must have exactly two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

json to_json(const GraphSpec& spec) {
    json params = json::object();
    for (const auto& [name, value] : spec.parameters) params[name] = value;
    return json{{"family", to_string(spec.family)}, {"parameters", std::move(params)}, {"seed", spec.seed}};
}

GraphSpec graph_spec_from_json(const json& j) {
    GraphSpec spec;
    try {
        spec.family = family_from_string(field<std::string>(j, "family"));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    if (j.contains("parameters"))
        spec.parameters = field<std::map<std::string, std::uint64_t>>(j, "parameters");
    if (j.contains("seed")) spec.seed = field<std::uint64_t>(j, "seed");
    return spec;
}

json to_json(const CategorySystem& sys) {
    return json{{"categories", sys.categories()}};
}

CategorySystem category_system_from_json(const json& j, std::size_t n) {
    auto cats = field<std::vector<Category>>(j, "categories");
    try {
        return CategorySystem(n, std::move(cats));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

json to_json(const GoodnessReport& report) {
    json pairs = json::array();
    for (auto [s, t] : report.counterexamples) pairs.push_back({s, t});
    return json{{"good", report.good},
                {"counterexamples", std::move(pairs)},
                {"connectivity_violations", report.connectivity_violations}};
}

json to_json(const RoutingReport& report) {
    json pairs = json::array();
    for (const auto& p : report.pairs) pairs.push_back({p.s, p.t, p.route_length, p.distance});
    json failures = json::array();
    for (const auto& f : report.failures) failures.push_back({f.s, f.t, f.stuck});
    return json{{"pairs", std::move(pairs)},
                {"failures", std::move(failures)},
                {"max_stretch", report.max_stretch},
                {"mean_stretch", report.mean_stretch}};
}

json to_json(const BoundsReport& report) {
    auto named = [](const std::vector<NamedBound>& bounds) {
        json out = json::array();
        for (const auto& b : bounds) out.push_back({b.name, b.value});
        return out;
    };
    json out{{"graph_params", {{"n", report.n}, {"diameter", report.diameter}, {"average_degree", report.average_degree}}},
             {"certified_bounds", named(report.certified)},
             {"indicative_bounds", named(report.indicative)}};
    out["achieved"] = report.achieved ? json(*report.achieved) : json(nullptr);
    return out;
}

json to_json(const SearchResult& result) {
    return json{{"optimum", result.optimum},
                {"witness", to_json(result.witness)},
                {"nodes_explored", result.nodes_explored}};
}

void write_routing_csv(std::ostream& out, const RoutingReport& report) {
    out << "s,t,route_len,dist,stretch\n";
    for (const auto& p : report.pairs)
        out << p.s << ',' << p.t << ',' << p.route_length << ',' << p.distance << ',' << format_real(p.stretch())
            << '\n';
}

void write_bounds_csv(std::ostream& out, const BoundsReport& report) {
    out << "bound_name,value\n";
    for (const auto& b : report.certified) out << b.name << ',' << format_real(b.value) << '\n';
    for (const auto& b : report.indicative) out << b.name << ',' << format_real(b.value) << '\n';
    if (report.achieved) out << "achieved," << *report.achieved << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const CategorySystem* sys,
               std::optional<std::size_t> highlight_category) {
    if (highlight_category && (!sys || *highlight_category >= sys->size()))
        throw InvalidArgument("highlighted category index out of range");
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v << " [label=\"" << v << '"';
        if (highlight_category && sys->contains(*highlight_category, v)) out << ", style=filled, fillcolor=orange";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace catroute
