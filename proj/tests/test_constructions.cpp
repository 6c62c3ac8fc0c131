#include <doctest.h>

#include <bit>
#include <array>
#include <cmath>

#include "catroute/bounds.hpp"
#include "catroute/constructions.hpp"
#include "oracles.hpp"

using namespace catroute;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t load(const CategorySystem& sys, Vertex v) { return sys.memberships(v).size(); }

void check_good(const CategorySystem& sys, const Graph& g) {
    auto report = is_good(sys, g);
    CHECK(report.good);
    CHECK(report.connectivity_violations.empty());
    if (g.num_vertices() <= 40) CHECK(oracle::is_good(sys, g));
}

void check_cut(const TreeDecorated& t) {
    const std::size_t n = t.graph.num_vertices();
    auto cut = balanced_routing_cut(t);
    std::vector<Vertex> both = cut.left;
    both.insert(both.end(), cut.right.begin(), cut.right.end());
    std::sort(both.begin(), both.end());
    CHECK(both == t.graph.neighbors(cut.r));
    CHECK(cut.left_tree.size() + cut.right_tree.size() == n + 1);
    std::vector<Vertex> common;
    std::set_intersection(cut.left_tree.begin(), cut.left_tree.end(), cut.right_tree.begin(), cut.right_tree.end(),
                          std::back_inserter(common));
    CHECK(common == std::vector<Vertex>{cut.r});
    for (auto size : {cut.left_tree.size(), cut.right_tree.size()}) {
        CHECK(size >= ceil_div(n, 3));
        CHECK(size <= ceil_div(2 * n, 3));
    }
}

}  // namespace

TEST_CASE("path_system") {
    auto p2 = path_system(2);
    CHECK(p2.categories() == std::vector<Category>{{1}, {0}});
    CHECK(memdim(path_system(5)) == 4);
    CHECK_THROWS_AS(path_system(1), InvalidArgument);
    for (std::size_t n = 2; n <= 12; ++n) {
        auto sys = path_system(n);
        for (Vertex v = 0; v < n; ++v) CHECK(load(sys, v) == n - 1);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b) CHECK(cdist(sys, a, b) == (a > b ? a - b : b - a));
        check_good(sys, make_path(n));
    }
}

TEST_CASE("cycle_system") {
    CHECK_THROWS_AS(cycle_system(2), InvalidArgument);
    for (std::size_t k = 3; k <= 12; ++k) {
        auto sys = cycle_system(k);
        auto g = make_cycle(k);
        CHECK(memdim(sys) == ceil_div(k, 2));
        auto d = all_pairs_distances(g);
        for (Vertex a = 0; a < k; ++a)
            for (Vertex b = 0; b < k; ++b) CHECK(cdist(sys, a, b) == d[a][b]);
        check_good(sys, g);
    }
}

TEST_CASE("product_system adds memdims") {
    auto torus = torus_system(3, 4);
    CHECK(memdim(torus) == 4);
    check_good(torus, make_torus(3, 4));
    CHECK(memdim(hypercube_system(4)) == 4);
    CHECK(memdim(grid_system(3, 6)) == 7);
    std::vector<std::pair<CategorySystem, Graph>> parts{{path_system(3), make_path(3)},
                                                        {cycle_system(5), make_cycle(5)},
                                                        {star_antichain_system(4), make_star(4, 1)}};
    for (const auto& [sa, ga] : parts)
        for (const auto& [sb, gb] : parts) {
            auto sys = product_system(sa, ga, sb, gb);
            CHECK(memdim(sys) == memdim(sa) + memdim(sb));
            check_good(sys, cross_product(ga, gb));
        }
}

TEST_CASE("star_binary_system") {
    CHECK(memdim(star_binary_system(1)) == 1);
    check_good(star_binary_system(1), make_star(1, 1));
    CHECK(memdim(star_binary_system(4)) <= 5);
    CHECK(load(star_binary_system(8), 0) == 6);
    for (std::size_t l = 2; l <= 40; ++l) {
        auto sys = star_binary_system(l);
        check_good(sys, make_star(l, 1));
        CHECK(memdim(sys) <= 1 + 2 * std::bit_width(l - 1));
    }
}

TEST_CASE("star_antichain_system") {
    auto six = star_antichain_system(6);
    CHECK(load(six, 0) == 4);
    for (Vertex v = 1; v <= 6; ++v) CHECK(load(six, v) == 3);
    CHECK(memdim(star_antichain_system(3)) == 3);
    CHECK(memdim(star_antichain_system(2)) == 2);
    for (std::size_t l = 2; l <= 80; ++l) {
        auto codes = antichain_codes(l);
        REQUIRE(codes.size() == l);
        const std::size_t k = oracle::antichain_k(l);
        for (std::size_t i = 0; i < l; ++i) {
            CHECK(std::popcount(codes[i]) == static_cast<int>(k / 2));
            CHECK(codes[i] < (std::uint64_t{1} << k));
            for (std::size_t j = 0; j < l; ++j)
                if (i != j) CHECK((codes[i] & ~codes[j]) != 0);  // incomparable
        }
        auto sys = star_antichain_system(l);
        CHECK(load(sys, 0) == k);
        CHECK(memdim(sys) == k);
        check_good(sys, make_star(l, 1));
    }
}

TEST_CASE("long_star_system") {
    check_good(long_star_system(2, 1), make_star(2, 1));
    check_good(long_star_system(1, 4), make_star(1, 4));
    for (std::size_t l : {2, 3, 4, 5, 8})
        for (std::size_t d = 1; d <= 4; ++d) {
            auto sys = long_star_system(l, d);
            check_good(sys, make_star(l, d));
            CHECK(memdim(sys) >= 2 * d);
            CHECK(memdim(sys) <= (2 * d + 1) * std::bit_width(l - 1) + d);
        }
    CHECK(memdim(long_star_system(4, 2)) <= 12);
    CHECK(memdim(long_star_system(8, 3)) <= 24);
}

TEST_CASE("balanced_routing_cut examples") {
    auto p3 = balanced_routing_cut(TreeDecorated::from_graph(make_path(3)));
    CHECK(p3.r == 1);
    CHECK(p3.left_tree.size() == 2);
    CHECK(p3.right_tree.size() == 2);
    auto star = balanced_routing_cut(TreeDecorated::from_graph(make_star(4, 1)));
    CHECK(star.r == 0);
    CHECK(star.left.size() == 2);
    CHECK(star.right.size() == 2);
    CHECK(star.left_tree.size() == 3);
    auto p9 = balanced_routing_cut(TreeDecorated::from_graph(make_path(9)));
    CHECK(p9.r == 4);
    CHECK(p9.left_tree.size() == 5);
    CHECK(p9.right_tree.size() == 5);
    CHECK_THROWS_AS(balanced_routing_cut(TreeDecorated::from_graph(make_path(2))), InvalidArgument);
}

TEST_CASE("tree_system examples") {
    CHECK(tree_system(TreeDecorated::from_graph(make_path(2))) == path_system(2));
    CHECK(tree_system(TreeDecorated::from_graph(Graph::from_edges(1, {}))).empty());
    auto star = tree_system(TreeDecorated::from_graph(make_star(4, 1)));
    check_good(star, make_star(4, 1));
    CHECK(memdim(star) <= 8);
    CHECK_THROWS_AS(TreeDecorated::from_graph(make_cycle(4)), InvalidArgument);
}

TEST_CASE("property: tree_system on random trees and caterpillars") {
    std::vector<Graph> trees;
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        trees.push_back(make_random_tree(3 + seed * 3, seed));
        trees.push_back(oracle::random_tree(3 + seed * 2, seed));
    }
    for (std::size_t spine = 1; spine <= 8; ++spine)
        for (std::size_t legs = 1; legs <= 3; ++legs) trees.push_back(oracle::caterpillar(spine, legs));
    for (const auto& g : trees) {
        auto t = TreeDecorated::from_graph(g);
        const std::size_t n = g.num_vertices();
        if (n >= 3) check_cut(t);
        auto result = build_tree_system(t);
        check_good(result.system, g);
        CHECK(memdim(result.system) >= diameter(g));
        // log_{3/2} n plus slack for the base levels.
        CHECK(static_cast<double>(result.recursion_depth) <= std::log(n) / std::log(1.5) + 2.0);
    }
}

TEST_CASE("general_system") {
    auto tree = make_random_tree(30, 4);
    CHECK(general_system(tree) == tree_system(TreeDecorated::from_graph(tree)));
    auto torus = make_torus(4, 4);
    auto sys = general_system(torus);
    check_good(sys, torus);
    const double d = 2.0 * diameter(torus);
    MESSAGE("torus(4,4) general memdim " << memdim(sys) << ", d log(2n/d) = " << d * std::log2(32.0 / d));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = make_random_connected(100, 300, seed);
        CHECK(is_good(general_system(g), g).good);
    }
}

TEST_CASE("clique_wand_system") {
    for (auto [n, delta, diam] : std::vector<std::array<std::size_t, 3>>{
             {16, 4, 3}, {4, 2, 1}, {1, 2, 1}, {2, 3, 2}, {7, 3, 4}, {9, 5, 1}, {30, 6, 2}, {5, 8, 3}}) {
        auto g = make_clique_wand(n, delta, diam);
        auto sys = clique_wand_system(n, delta, diam);
        check_good(sys, g);
        CHECK(memdim(sys) >= diameter(g));
    }
    CHECK_THROWS_AS(clique_wand_system(0, 3, 1), InvalidArgument);
}
