#include "catroute/graph.hpp"

#include "rng.hpp"

#include <algorithm>
#include <set>

namespace catroute {

namespace {

using detail::uniform_below;

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

std::vector<Edge> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    edges.reserve(n == 0 ? 0 : n - 1);
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(uniform_below(rng, v), v);
    return edges;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::grid: return "grid";
        case Family::torus: return "torus";
        case Family::hypercube: return "hypercube";
        case Family::star: return "star";
        case Family::clique_wand: return "clique_wand";
        case Family::random_tree: return "random_tree";
        case Family::random_connected: return "random_connected";
    }
    return "unknown";
}

Family family_from_string(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::grid, Family::torus, Family::hypercube,
                     Family::star, Family::clique_wand, Family::random_tree,
                     Family::random_connected})
        if (to_string(f) == name) return f;
    throw InvalidArgument("unknown graph family '" + name + "'");
}

std::uint64_t GraphSpec::param(const std::string& name) const {
    auto it = parameters.find(name);
    if (it == parameters.end())
        throw InvalidArgument("family " + to_string(family) + " requires parameter '" + name + "'");
    return it->second;
}

Graph make_path(std::size_t n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t k) {
    require(k >= 3, "cycle needs k >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(k - 1, 0);
    return Graph::from_edges(k, edges);
}

Graph make_grid(std::size_t a, std::size_t b) {
    require(a >= 2 && b >= 2, "grid needs a, b >= 2");
    return cross_product(make_path(a), make_path(b));
}

Graph make_torus(std::size_t k, std::size_t l) {
    require(k >= 3 && l >= 3, "torus needs k, l >= 3");
    return cross_product(make_cycle(k), make_cycle(l));
}

Graph make_hypercube(std::size_t d) {
    require(d >= 1, "hypercube needs d >= 1");
    require(d < 8 * sizeof(std::size_t) - 1, "hypercube dimension too large");
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < d; ++bit) {
            Vertex w = v ^ (std::size_t{1} << bit);
            if (v < w) edges.emplace_back(v, w);
        }
    return Graph::from_edges(n, edges);
}

Graph make_star(std::size_t leaves, std::size_t arm_length) {
    require(leaves >= 1 && arm_length >= 1, "star needs l >= 1 and d >= 1");
    const std::size_t n = 1 + leaves * arm_length;
    std::vector<Edge> edges;
    for (std::size_t arm = 0; arm < leaves; ++arm) {
        Vertex first = 1 + arm * arm_length;
        edges.emplace_back(0, first);
        for (std::size_t j = 1; j < arm_length; ++j) edges.emplace_back(first + j - 1, first + j);
    }
    return Graph::from_edges(n, edges);
}

Graph make_clique_wand(std::size_t outer, std::size_t clique, std::size_t path_length) {
    require(outer >= 1 && clique >= 2 && path_length >= 1,
            "clique_wand needs n >= 1, delta >= 2, diam >= 1");
    const std::size_t n = clique + outer + path_length;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < clique; ++u)
        for (Vertex w = u + 1; w < clique; ++w) edges.emplace_back(u, w);
    for (Vertex o = clique; o < clique + outer; ++o)
        for (Vertex u = 0; u < clique; ++u) edges.emplace_back(u, o);
    Vertex prev = 0;
    for (Vertex p = clique + outer; p < n; ++p) {
        edges.emplace_back(prev, p);
        prev = p;
    }
    return Graph::from_edges(n, edges);
}

Graph make_random_tree(std::size_t n, std::uint64_t seed) {
    require(n >= 1, "random_tree needs n >= 1");
    std::mt19937_64 rng(seed);
    return Graph::from_edges(n, random_tree_edges(n, rng));
}

Graph make_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
    require(n >= 1, "random_connected needs n >= 1");
    require(m + 1 >= n, "random_connected needs m >= n - 1");
    require(m <= n * (n - 1) / 2, "random_connected: m exceeds the number of vertex pairs");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges = random_tree_edges(n, rng);
    std::set<Edge> present(edges.begin(), edges.end());
    // Dense requests would make rejection sampling crawl; pick from the
    // complement explicitly instead.
    if (2 * m > n * (n - 1) / 2) {
        std::vector<Edge> missing;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!present.count({u, v})) missing.emplace_back(u, v);
        for (std::size_t i = 0; edges.size() < m; ++i) {
            std::size_t j = i + uniform_below(rng, missing.size() - i);
            std::swap(missing[i], missing[j]);
            edges.push_back(missing[i]);
        }
    } else {
        while (edges.size() < m) {
            Vertex u = uniform_below(rng, n);
            Vertex v = uniform_below(rng, n);
            if (u == v) continue;
            Edge e{std::min(u, v), std::max(u, v)};
            if (present.insert(e).second) edges.push_back(e);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph generate(const GraphSpec& spec) {
    switch (spec.family) {
        case Family::path: return make_path(spec.param("n"));
        case Family::cycle: return make_cycle(spec.param("k"));
        case Family::grid: return make_grid(spec.param("a"), spec.param("b"));
        case Family::torus: return make_torus(spec.param("k"), spec.param("l"));
        case Family::hypercube: return make_hypercube(spec.param("d"));
        case Family::star: return make_star(spec.param("l"), spec.param("d"));
        case Family::clique_wand:
            return make_clique_wand(spec.param("n"), spec.param("delta"), spec.param("diam"));
        case Family::random_tree: return make_random_tree(spec.param("n"), spec.seed);
        case Family::random_connected:
            return make_random_connected(spec.param("n"), spec.param("m"), spec.seed);
    }
    throw InvalidArgument("unknown graph family");
}

}  // namespace catroute
