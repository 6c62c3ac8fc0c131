#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catroute {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown for out-of-range parameters, bad vertex ids and structurally invalid input.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected, simple, connected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted ascending; every algorithm that walks neighbours
/// therefore visits them in ascending id order.
class Graph {
public:
    Graph() = default;

    /// Builds the graph from an edge list. Edge orientation and order are
    /// irrelevant. Throws on self-loops, duplicate edges, out-of-range ids or a
    /// disconnected result.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    double average_degree() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
};

/// A graph known to be a tree, optionally rooted.
struct TreeDecorated {
    Graph graph;
    std::optional<Vertex> root;

    /// Throws InvalidArgument unless `g` has exactly n-1 edges.
    static TreeDecorated from_graph(Graph g, std::optional<Vertex> root = std::nullopt);
};

bool is_tree(const Graph& g) noexcept;

enum class Family {
    path,
    cycle,
    grid,
    torus,
    hypercube,
    star,
    clique_wand,
    random_tree,
    random_connected,
};

std::string to_string(Family f);
Family family_from_string(const std::string& name);

/// Declarative generator input. Parameter names per family:
///   path{n} cycle{k} grid{a,b} torus{k,l} hypercube{d} star{l,d}
///   clique_wand{n,delta,diam} random_tree{n} random_connected{n,m}
struct GraphSpec {
    Family family = Family::path;
    std::map<std::string, std::uint64_t> parameters;
    std::uint64_t seed = 0;

    std::uint64_t param(const std::string& name) const;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances, one BFS per vertex.
std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g);

std::size_t eccentricity(const Graph& g, Vertex v);
std::size_t diameter(const Graph& g);

/// Vertex of minimum eccentricity, lowest id on ties.
Vertex eccentricity_center(const Graph& g);

/// BFS tree rooted at eccentricity_center(g). Its diameter is at most
/// 2 * radius(g) <= 2 * diameter(g).
TreeDecorated spanning_tree(const Graph& g);

/// Cartesian product; vertex (u, x) gets id u * |V(h)| + x.
Graph cross_product(const Graph& g, const Graph& h);

// Generators. Vertex layouts are part of the contract:
//  - path: 0-1-...-(n-1)
//  - cycle: path plus edge (k-1, 0)
//  - grid(a,b) = path(a) x path(b); torus(k,l) = cycle(k) x cycle(l)
//  - hypercube(d): ids are d-bit words, edges flip one bit
//  - star(l,d): center 0; arm i (0-based) holds 1+i*d .. (i+1)*d, outward,
//    vertex 1+i*d adjacent to the center and (i+1)*d the leaf
//  - clique_wand(n,delta,diam): clique 0..delta-1, outer set
//    delta..delta+n-1 (each adjacent to the whole clique), pendant path
//    delta+n .. delta+n+diam-1 hanging off clique vertex 0.
//    Diameter is diam+1.
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t k);
Graph make_grid(std::size_t a, std::size_t b);
Graph make_torus(std::size_t k, std::size_t l);
Graph make_hypercube(std::size_t d);
Graph make_star(std::size_t leaves, std::size_t arm_length);
Graph make_clique_wand(std::size_t outer, std::size_t clique, std::size_t path_length);
Graph make_random_tree(std::size_t n, std::uint64_t seed);
Graph make_random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

Graph generate(const GraphSpec& spec);

/// Shape of a star graph (center joined to `leaves` disjoint arms of equal
/// length). Only recognised for leaves >= 3; smaller stars are paths.
struct StarShape {
    Vertex center = 0;
    std::size_t leaves = 0;
    std::size_t arm_length = 0;
};

std::optional<StarShape> detect_star(const Graph& g);

}  // namespace catroute
