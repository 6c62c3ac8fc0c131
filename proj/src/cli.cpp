#include "catroute/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "catroute/bounds.hpp"
#include "catroute/constructions.hpp"
#include "catroute/io.hpp"

namespace catroute {

using nlohmann::json;
using Params = std::map<std::string, std::uint64_t>;

namespace {

std::optional<std::uint64_t> lookup(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) return std::nullopt;
    return it->second;
}

void require_same(const Graph& g, const Graph& expected, const std::string& what) {
    if (!(g == expected))
        throw InvalidArgument("graph is not the " + what + " layout this construction targets");
}

/// First (x, n/x) factorisation for which `make(x, n/x)` reproduces g.
template <class Make>
std::pair<std::size_t, std::size_t> infer_factors(const Graph& g, const Params& p, const char* first,
                                                  const char* second, std::size_t min_factor, Make make) {
    const std::size_t n = g.num_vertices();
    auto a = lookup(p, first);
    auto b = lookup(p, second);
    if (a && b) return {*a, *b};
    for (std::size_t x = min_factor; x * min_factor <= n; ++x) {
        if (n % x || (a && *a != x) || (b && *b != n / x) || n / x < min_factor) continue;
        if (make(x, n / x) == g) return {x, n / x};
    }
    throw InvalidArgument("could not recover the factor sizes from the graph; pass them explicitly");
}

std::size_t infer_arm_length(const Graph& g, const Params& p) {
    if (auto d = lookup(p, "d")) return *d;
    if (auto star = detect_star(g)) return star->arm_length;
    // One or two arms: a path with the center at vertex 0 or in the middle.
    const std::size_t n = g.num_vertices();
    return g.degree(0) == 2 ? (n - 1) / 2 : n - 1;
}

}  // namespace

const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names{"path",        "cycle",          "grid",      "torus",
                                                "hypercube",   "star_binary",    "star_antichain",
                                                "long_star",   "tree",           "general",
                                                "clique_wand"};
    return names;
}

CategorySystem build_construction(const std::string& name, const Graph& g, const Params& p) {
    const std::size_t n = g.num_vertices();
    if (name == "path") {
        std::size_t len = lookup(p, "n").value_or(n);
        require_same(g, make_path(len), "path");
        return path_system(len);
    }
    if (name == "cycle") {
        std::size_t k = lookup(p, "k").value_or(n);
        require_same(g, make_cycle(k), "cycle");
        return cycle_system(k);
    }
    if (name == "grid") {
        auto [a, b] = infer_factors(g, p, "a", "b", 2, make_grid);
        require_same(g, make_grid(a, b), "grid");
        return grid_system(a, b);
    }
    if (name == "torus") {
        auto [k, l] = infer_factors(g, p, "k", "l", 3, make_torus);
        require_same(g, make_torus(k, l), "torus");
        return torus_system(k, l);
    }
    if (name == "hypercube") {
        std::size_t d = lookup(p, "d").value_or(static_cast<std::size_t>(std::bit_width(n) - 1));
        require_same(g, make_hypercube(d), "hypercube");
        return hypercube_system(d);
    }
    if (name == "star_binary" || name == "star_antichain") {
        std::size_t l = lookup(p, "l").value_or(n - 1);
        require_same(g, make_star(l, 1), "star");
        return name == "star_binary" ? star_binary_system(l) : star_antichain_system(l);
    }
    if (name == "long_star") {
        std::size_t d = infer_arm_length(g, p);
        if (d == 0 || (n - 1) % d) throw InvalidArgument("graph is not a star with equal arms");
        std::size_t l = lookup(p, "l").value_or((n - 1) / d);
        require_same(g, make_star(l, d), "star");
        return long_star_system(l, d);
    }
    if (name == "tree") return tree_system(TreeDecorated::from_graph(g));
    if (name == "general") return general_system(g);
    if (name == "clique_wand") {
        // Walk the pendant path back from its end (the last id) to clique vertex 0.
        std::size_t diam = 0;
        Vertex cur = n - 1;
        while (cur != 0 && g.degree(cur) <= 2 && diam < n) {
            ++diam;
            cur = g.neighbors(cur).front();
        }
        diam = lookup(p, "diam").value_or(diam);
        std::size_t delta = lookup(p, "delta").value_or(diam < n ? g.degree(n - diam - 1) : 0);
        if (delta + diam >= n) throw InvalidArgument("graph is not a clique_wand layout");
        std::size_t outer = lookup(p, "n").value_or(n - delta - diam);
        require_same(g, make_clique_wand(outer, delta, diam), "clique_wand");
        return clique_wand_system(outer, delta, diam);
    }
    throw InvalidArgument("unknown construction '" + name + "'");
}

namespace {

struct Failure {
    int code;
    std::string kind;
    std::string message;
};

void report_error(std::ostream& err, const Failure& f) {
    err << json{{"error", {{"code", f.code}, {"kind", f.kind}, {"message", f.message}}}}.dump() << '\n';
}

std::size_t env_or(const char* name, std::size_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return static_cast<std::size_t>(std::stoull(v));
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("environment variable ") + name + " is not a number");
        }
    }
    return fallback;
}

/// Writes to `path`, or to `out` when path is empty or "-".
void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_text_file(path, text);
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }
std::string compact(const json& j) { return j.dump() + "\n"; }

struct Options {
    std::string family;
    std::string spec_path;
    std::string graph_path;
    std::string system_path;
    std::string output;
    std::string construction;
    std::string csv_path;
    std::string json_path;
    Params params;
    std::uint64_t seed = 0;
    bool all = false;
    std::optional<std::size_t> from;
    std::optional<std::size_t> to;
    std::optional<std::size_t> sample;
    std::optional<std::size_t> memdim_cap;
    std::optional<std::size_t> category_cap;
    std::optional<std::size_t> max_vertices;
    std::optional<std::size_t> highlight;
};

void add_param_flags(CLI::App* cmd, Options& o) {
    for (const char* name : {"n", "k", "l", "d", "a", "b", "m", "delta", "diam"}) {
        cmd->add_option_function<std::uint64_t>(
               std::string("--") + name, [&o, name](std::uint64_t v) { o.params[name] = v; },
               std::string("family parameter '") + name + "'")
            ->type_name("INT");
    }
}

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

CategorySystem load_system(const std::string& path, const Graph& g) {
    return category_system_from_json(read_json_file(path), g.num_vertices());
}

RoutingReport route_command(const Options& o, const CategorySystem& sys, const Graph& g) {
    if (o.from || o.to) {
        if (!o.from || !o.to) throw InvalidArgument("--from and --to go together");
        if (*o.from == *o.to || *o.from >= g.num_vertices() || *o.to >= g.num_vertices())
            throw InvalidArgument("--from/--to must be distinct vertex ids of the graph");
        Route r = greedy_route(sys, g, *o.from, *o.to);
        RoutingReport report;
        if (r.delivered()) {
            RoutedPair p{*o.from, *o.to, r.length(), bfs_distances(g, *o.from)[*o.to]};
            report.max_stretch = report.mean_stretch = p.stretch();
            report.pairs.push_back(p);
        } else {
            report.failures.push_back({*o.from, *o.to, *r.stuck});
        }
        return report;
    }
    if (o.sample) return route_all_pairs(sys, g, PairSample{*o.sample, o.seed});
    return route_all_pairs(sys, g);
}

int dispatch(const std::string& verb, const Options& o, std::ostream& out) {
    if (verb == "gen") {
        GraphSpec spec;
        if (!o.spec_path.empty()) spec = graph_spec_from_json(read_json_file(o.spec_path));
        if (!o.family.empty()) spec.family = family_from_string(o.family);
        else if (o.spec_path.empty()) throw InvalidArgument("gen needs --family or --spec");
        for (const auto& [k, v] : o.params) spec.parameters[k] = v;
        if (o.seed) spec.seed = o.seed;
        emit(out, o.output, compact(to_json(generate(spec))));
        return exit_ok;
    }
    if (verb == "build") {
        Graph g = load_graph(o.graph_path);
        emit(out, o.output, compact(to_json(build_construction(o.construction, g, o.params))));
        return exit_ok;
    }
    if (verb == "verify") {
        Graph g = load_graph(o.graph_path);
        auto report = is_good(load_system(o.system_path, g), g);
        out << pretty(to_json(report));
        return report.good ? exit_ok : exit_not_good;
    }
    if (verb == "route") {
        Graph g = load_graph(o.graph_path);
        auto report = route_command(o, load_system(o.system_path, g), g);
        std::ostringstream csv;
        write_routing_csv(csv, report);
        emit(out, o.output, csv.str());
        if (!o.json_path.empty()) write_text_file(o.json_path, pretty(to_json(report)));
        return report.failures.empty() ? exit_ok : exit_not_good;
    }
    if (verb == "bounds") {
        Graph g = load_graph(o.graph_path);
        std::optional<CategorySystem> sys;
        if (!o.system_path.empty()) sys = load_system(o.system_path, g);
        auto report = bounds_report(g, sys ? &*sys : nullptr);
        emit(out, o.output, pretty(to_json(report)));
        if (!o.csv_path.empty()) {
            std::ostringstream csv;
            write_bounds_csv(csv, report);
            write_text_file(o.csv_path, csv.str());
        }
        return exit_ok;
    }
    if (verb == "search") {
        Graph g = load_graph(o.graph_path);
        const std::size_t max_n = o.max_vertices.value_or(env_or("CATROUTE_MAX_VERTICES", 6));
        if (g.num_vertices() > max_n)
            throw CapExhausted("graph has " + std::to_string(g.num_vertices()) + " vertices, search limit is " +
                               std::to_string(max_n));
        auto result = exact_min_memdim(g, o.memdim_cap.value_or(env_or("CATROUTE_MEMDIM_CAP", 6)),
                                       o.category_cap.value_or(env_or("CATROUTE_CATEGORY_CAP", 64)));
        emit(out, o.output, pretty(to_json(result)));
        return exit_ok;
    }
    if (verb == "report") {
        Graph g = load_graph(o.graph_path);
        CategorySystem sys = load_system(o.system_path, g);
        if (o.output.empty()) throw InvalidArgument("report needs an output directory (-o)");
        std::filesystem::path dir(o.output);
        std::filesystem::create_directories(dir);
        auto goodness = is_good(sys, g);
        auto routing = o.sample ? route_all_pairs(sys, g, PairSample{*o.sample, o.seed}) : route_all_pairs(sys, g);
        auto bounds = bounds_report(g, &sys);
        std::ostringstream routing_csv, bounds_csv, dot;
        write_routing_csv(routing_csv, routing);
        write_bounds_csv(bounds_csv, bounds);
        write_dot(dot, g, &sys, o.highlight);
        write_text_file((dir / "graph.json").string(), compact(to_json(g)));
        write_text_file((dir / "system.json").string(), compact(to_json(sys)));
        write_text_file((dir / "goodness.json").string(), pretty(to_json(goodness)));
        write_text_file((dir / "routing.csv").string(), routing_csv.str());
        write_text_file((dir / "routing.json").string(), pretty(to_json(routing)));
        write_text_file((dir / "bounds.json").string(), pretty(to_json(bounds)));
        write_text_file((dir / "bounds.csv").string(), bounds_csv.str());
        write_text_file((dir / "graph.dot").string(), dot.str());
        return goodness.good ? exit_ok : exit_not_good;
    }
    throw InvalidArgument("unknown command '" + verb + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Category systems for greedy routing: generate, build, verify, route, bound, search."};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "generate a graph (Graph JSON)");
    gen->add_option("--family", o.family, "path|cycle|grid|torus|hypercube|star|clique_wand|random_tree|random_connected");
    gen->add_option("--spec", o.spec_path, "GraphSpec JSON file")->check(CLI::ExistingFile);
    add_param_flags(gen, o);
    gen->add_option("--seed", o.seed, "seed for random families");
    gen->add_option("-o,--output", o.output, "output file (default stdout)");

    auto* build = app.add_subcommand("build", "build a category system (CategorySystem JSON)");
    build->add_option("--construction", o.construction, "construction name")->required()->check(
        CLI::IsMember(construction_names()));
    build->add_option("-g,--graph", o.graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    add_param_flags(build, o);
    build->add_option("-o,--output", o.output, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check goodness; exit 0 iff good");
    verify->add_option("-g,--graph", o.graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("-s,--system", o.system_path, "CategorySystem JSON")->required()->check(CLI::ExistingFile);

    auto* route = app.add_subcommand("route", "greedy-route pairs (RoutingReport CSV)");
    route->add_option("-g,--graph", o.graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    route->add_option("-s,--system", o.system_path, "CategorySystem JSON")->required()->check(CLI::ExistingFile);
    auto* all = route->add_flag("--all", o.all, "route every ordered pair (default)");
    auto* from = route->add_option("--from", o.from, "source vertex");
    route->add_option("--to", o.to, "target vertex")->needs(from);
    auto* sample = route->add_option("--sample", o.sample, "number of sampled pairs");
    all->excludes(from)->excludes(sample);
    sample->excludes(from);
    route->add_option("--seed", o.seed, "sampling seed");
    route->add_option("-o,--output", o.output, "CSV output file (default stdout)");
    route->add_option("--json", o.json_path, "also write the RoutingReport JSON here");

    auto* bounds = app.add_subcommand("bounds", "evaluate lower bounds (BoundsReport JSON)");
    bounds->add_option("-g,--graph", o.graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    bounds->add_option("-s,--system", o.system_path, "CategorySystem JSON")->check(CLI::ExistingFile);
    bounds->add_option("-o,--output", o.output, "JSON output file (default stdout)");
    bounds->add_option("--csv", o.csv_path, "also write bound_name,value CSV here");

    auto* search = app.add_subcommand("search", "exhaustive optimal memdim (SearchResult JSON)");
    search->add_option("-g,--graph", o.graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    search->add_option("--memdim-cap", o.memdim_cap, "largest memdim tried [env CATROUTE_MEMDIM_CAP, 6]");
    search->add_option("--cat-cap", o.category_cap, "most categories per system [env CATROUTE_CATEGORY_CAP, 64]");
    search->add_option("--max-vertices", o.max_vertices, "largest graph accepted [env CATROUTE_MAX_VERTICES, 6]");
    search->add_option("-o,--output", o.output, "output file (default stdout)");

    auto* report = app.add_subcommand("report", "write every artifact for a graph/system pair");
    report->add_option("-g,--graph", o.graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    report->add_option("-s,--system", o.system_path, "CategorySystem JSON")->required()->check(CLI::ExistingFile);
    report->add_option("-o,--output", o.output, "output directory")->required();
    report->add_option("--highlight-category", o.highlight, "category to fill in the DOT export");
    report->add_option("--sample", o.sample, "route a seeded sample instead of all pairs");
    report->add_option("--seed", o.seed, "sampling seed");

    std::vector<const char*> argv{"catroute"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        report_error(err, {exit_bad_input, "usage", e.what()});
        return exit_bad_input;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        return dispatch(verb, o, out);
    } catch (const CapExhausted& e) {
        report_error(err, {exit_cap_exhausted, "cap_exhausted", e.what()});
        return exit_cap_exhausted;
    } catch (const ParseError& e) {
        report_error(err, {exit_bad_input, "malformed_input", e.what()});
        return exit_bad_input;
    } catch (const InvalidArgument& e) {
        report_error(err, {exit_bad_input, "invalid_argument", e.what()});
        return exit_bad_input;
    } catch (const std::exception& e) {
        report_error(err, {exit_bad_input, "error", e.what()});
        return exit_bad_input;
    }
}

}  // namespace catroute
