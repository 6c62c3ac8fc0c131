#include <doctest.h>

#include <random>

#include "catroute/graph.hpp"
#include "oracles.hpp"

using namespace catroute;

namespace {

bool symmetric(const Graph& g) {
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u == v || !g.has_edge(v, u)) return false;
    return true;
}

std::size_t tree_diameter(const TreeDecorated& t) { return diameter(t.graph); }

}  // namespace

TEST_CASE("from_edges rejects malformed input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), InvalidArgument);          // disconnected
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}, {0, 1}}), InvalidArgument);  // self-loop
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), InvalidArgument);  // duplicate
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), InvalidArgument);
    CHECK_NOTHROW(Graph::from_edges(1, {}));
}

TEST_CASE("bfs distances on small families") {
    CHECK(bfs_distances(make_path(3), 0) == std::vector<std::size_t>{0, 1, 2});
    CHECK(bfs_distances(make_cycle(4), 0) == std::vector<std::size_t>{0, 1, 2, 1});
    CHECK(bfs_distances(make_star(4, 1), 0) == std::vector<std::size_t>{0, 1, 1, 1, 1});
    CHECK_THROWS_AS(bfs_distances(make_path(3), 3), InvalidArgument);
}

TEST_CASE("diameter and center") {
    CHECK(diameter(make_path(5)) == 4);
    CHECK(diameter(make_hypercube(3)) == 3);
    CHECK(eccentricity_center(make_path(5)) == 2);
    CHECK(eccentricity_center(make_star(3, 4)) == 0);
    CHECK(eccentricity_center(make_cycle(4)) == 0);
    // Path hangs off clique vertex 0, so the far end of the path sits diam+1
    // hops from every outer vertex.
    CHECK(diameter(make_clique_wand(4, 3, 5)) == 6);
    CHECK(diameter(make_clique_wand(16, 4, 3)) == 4);
}

TEST_CASE("generator sizes") {
    auto s = make_star(4, 1);
    CHECK(s.num_vertices() == 5);
    CHECK(s.num_edges() == 4);
    auto s2 = make_star(3, 2);
    CHECK(s2.num_vertices() == 7);
    CHECK(diameter(s2) == 4);
    CHECK(s2.has_edge(0, 1));
    CHECK(s2.has_edge(1, 2));
    CHECK(s2.has_edge(0, 3));
    auto t = make_torus(3, 4);
    CHECK(t.num_vertices() == 12);
    CHECK(t.num_edges() == 24);
    for (Vertex v = 0; v < 12; ++v) CHECK(t.degree(v) == 4);
    auto w = make_clique_wand(16, 4, 3);
    CHECK(w.num_vertices() == 23);
    CHECK(w.num_edges() == 6 + 64 + 3);
    CHECK(make_hypercube(4).num_edges() == 32);
    CHECK(make_grid(3, 5).num_edges() == 3 * 4 + 5 * 2);

    CHECK_THROWS_AS(make_path(1), InvalidArgument);
    CHECK_THROWS_AS(make_cycle(2), InvalidArgument);
    CHECK_THROWS_AS(make_grid(1, 3), InvalidArgument);
    CHECK_THROWS_AS(make_torus(2, 3), InvalidArgument);
    CHECK_THROWS_AS(make_hypercube(0), InvalidArgument);
    CHECK_THROWS_AS(make_star(0, 1), InvalidArgument);
    CHECK_THROWS_AS(make_clique_wand(1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(make_random_connected(5, 3, 1), InvalidArgument);
    CHECK_THROWS_AS(make_random_connected(4, 7, 1), InvalidArgument);
}

TEST_CASE("generate dispatches on the spec") {
    GraphSpec spec{Family::star, {{"l", 4}, {"d", 1}}, 0};
    CHECK(generate(spec) == make_star(4, 1));
    spec = GraphSpec{Family::random_connected, {{"n", 30}, {"m", 60}}, 7};
    CHECK(generate(spec) == make_random_connected(30, 60, 7));
    spec.parameters.erase("m");
    CHECK_THROWS_AS(generate(spec), InvalidArgument);
    CHECK(family_from_string("clique_wand") == Family::clique_wand);
    CHECK(to_string(Family::random_tree) == "random_tree");
    CHECK_THROWS_AS(family_from_string("petersen"), InvalidArgument);
}

TEST_CASE("cross product") {
    auto sq = cross_product(make_path(2), make_path(2));
    CHECK(sq.num_vertices() == 4);
    CHECK(sq.num_edges() == 4);
    auto cube = cross_product(sq, make_path(2));
    CHECK(cube.num_vertices() == 8);
    CHECK(diameter(cube) == 3);
    for (Vertex v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);
    for (std::size_t m = 2; m <= 5; ++m)
        for (std::size_t n = 2; n <= 5; ++n) {
            auto g = cross_product(make_path(m), make_path(n));
            CHECK(g.num_vertices() == m * n);
            CHECK(g.num_edges() == m * (n - 1) + n * (m - 1));
        }
    auto g = make_cycle(5), h = make_star(3, 2);
    auto p = cross_product(g, h);
    CHECK(p.num_edges() == g.num_vertices() * h.num_edges() + h.num_vertices() * g.num_edges());
    // (u, x) -> u*|V(h)| + x
    CHECK(p.has_edge(0 * 7 + 1, 1 * 7 + 1));
    CHECK(p.has_edge(2 * 7 + 0, 2 * 7 + 3));
    CHECK(!p.has_edge(0, 8));
}

TEST_CASE("spanning tree") {
    auto p = make_path(6);
    auto t = spanning_tree(p);
    CHECK(t.graph == p);
    auto c = spanning_tree(make_cycle(4));
    CHECK(is_tree(c.graph));
    CHECK(tree_diameter(c) == 3);
    std::vector<Edge> k4;
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) k4.emplace_back(u, v);
    auto kt = spanning_tree(Graph::from_edges(4, k4));
    CHECK(tree_diameter(kt) == 2);
    CHECK(kt.root == Vertex{0});
}

TEST_CASE("property: generated graphs are symmetric, connected, seed-deterministic") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = make_random_tree(40, seed);
        CHECK(is_tree(t));
        CHECK(t == make_random_tree(40, seed));
        auto g = make_random_connected(40, 40 + seed * 10, seed);
        CHECK(g.num_edges() == 40 + seed * 10);
        CHECK(symmetric(g));
        CHECK(g == make_random_connected(40, 40 + seed * 10, seed));
    }
    CHECK(make_random_tree(40, 1) != make_random_tree(40, 2));
    // Dense request takes the complement path.
    CHECK(make_random_connected(12, 66, 3).num_edges() == 66);
}

TEST_CASE("property: BFS agrees with Floyd-Warshall and spanning trees stretch at most 2x diameter") {
    std::vector<Graph> graphs{make_grid(4, 3), make_torus(3, 5), make_hypercube(4), make_clique_wand(5, 3, 4),
                              make_star(4, 3)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) graphs.push_back(make_random_connected(25, 24 + 3 * seed, seed));
    for (const auto& g : graphs) {
        auto fw = oracle::floyd_warshall(g);
        auto ap = all_pairs_distances(g);
        CHECK(ap == fw);
        std::size_t diam = 0;
        for (const auto& row : fw)
            for (auto d : row) diam = std::max(diam, d);
        CHECK(diameter(g) == diam);
        auto t = spanning_tree(g);
        CHECK(is_tree(t.graph));
        for (auto [u, v] : t.graph.edges()) CHECK(g.has_edge(u, v));
        CHECK(tree_diameter(t) <= 2 * diam);
        std::mt19937 rng(1);
        std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
        for (int i = 0; i < 50; ++i) {
            Vertex a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(ap[a][c] <= ap[a][b] + ap[b][c]);
            CHECK(ap[a][b] == ap[b][a]);
        }
    }
}

TEST_CASE("detect_star") {
    auto s = detect_star(make_star(5, 3));
    REQUIRE(s);
    CHECK(s->center == 0);
    CHECK(s->leaves == 5);
    CHECK(s->arm_length == 3);
    CHECK_FALSE(detect_star(make_path(6)));
    CHECK_FALSE(detect_star(oracle::caterpillar(3, 2)));
    CHECK_FALSE(detect_star(make_cycle(5)));
}
