#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "catroute/category_system.hpp"
#include "catroute/constructions.hpp"
#include "oracles.hpp"

using namespace catroute;

namespace {

/// Random connected subsets grown from a seed vertex.
CategorySystem random_system(const Graph& g, std::size_t count, std::mt19937& rng) {
    std::vector<Category> cats;
    std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Vertex> cat{pick(rng)};
        std::size_t target = 1 + rng() % g.num_vertices();
        for (int tries = 0; cat.size() < target && tries < 50; ++tries) {
            Vertex from = cat[rng() % cat.size()];
            const auto& nb = g.neighbors(from);
            Vertex v = nb[rng() % nb.size()];
            if (std::find(cat.begin(), cat.end(), v) == cat.end()) cat.push_back(v);
        }
        cats.push_back(cat);
    }
    return CategorySystem(g.num_vertices(), cats);
}

}  // namespace

TEST_CASE("construction validates categories") {
    CHECK_THROWS_AS(CategorySystem(3, {{}}), InvalidArgument);
    CHECK_THROWS_AS(CategorySystem(3, {{0, 3}}), InvalidArgument);
    CategorySystem sys(4, {{2, 0, 2}, {3}});
    CHECK(sys.category(0) == Category{0, 2});
    CHECK(sys.memberships(2) == std::vector<std::size_t>{0});
    CHECK(sys.memberships(1).empty());
    CHECK(sys.contains(1, 3));
    CHECK_FALSE(sys.contains(0, 1));
}

TEST_CASE("cdist basics") {
    auto sys = path_system(5);
    CHECK(cdist(sys, 2, 2) == 0);
    CHECK(cdist(sys, 0, 4) == 4);
    CHECK(cdist(CategorySystem(2, {{1}}), 0, 1) == 1);
    CHECK_THROWS_AS(cdist(sys, 0, 5), InvalidArgument);
    auto to = cdist_to(sys, 4);
    CHECK(to == std::vector<std::size_t>{4, 3, 2, 1, 0});
}

TEST_CASE("memdim") {
    CHECK(memdim(CategorySystem(3, {})) == 0);
    CHECK(memdim(path_system(5)) == 4);
    CHECK(memdim(star_antichain_system(6)) == 4);
}

TEST_CASE("validate_connected") {
    auto p3 = make_path(3);
    CHECK(validate_connected(CategorySystem(3, {{0}, {1}, {2}}), p3).empty());
    CHECK(validate_connected(CategorySystem(3, {{1}, {0, 2}}), p3) == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(validate_connected(CategorySystem(4, {{0}}), p3), InvalidArgument);
}

TEST_CASE("is_good examples") {
    auto p5 = make_path(5);
    CHECK(is_good(path_system(5), p5).good);
    auto bad = is_good(CategorySystem(3, {{1, 2}, {2}}), make_path(3));
    CHECK_FALSE(bad.good);
    CHECK(std::find(bad.counterexamples.begin(), bad.counterexamples.end(), OrderedPair{2, 0}) !=
          bad.counterexamples.end());
    CHECK(is_good(star_binary_system(4), make_star(4, 1)).good);
    auto disconnected = is_good(CategorySystem(3, {{0, 2}, {0}, {1}, {2}, {0, 1}, {1, 2}}), make_path(3));
    CHECK_FALSE(disconnected.good);
    CHECK(disconnected.connectivity_violations == std::vector<std::size_t>{0});
    CHECK(is_good(CategorySystem(1, {}), Graph::from_edges(1, {})).good);
    CHECK_FALSE(is_good(CategorySystem(2, {}), make_path(2)).good);
}

TEST_CASE("greedy_route") {
    auto p5 = make_path(5);
    auto sys = path_system(5);
    auto r = greedy_route(sys, p5, 3, 3);
    CHECK(r.path == std::vector<Vertex>{3});
    CHECK(r.length() == 0);
    r = greedy_route(sys, p5, 0, 4);
    CHECK(r.delivered());
    CHECK(r.length() == 4);
    auto star = make_star(4, 1);
    r = greedy_route(star_binary_system(4), star, 1, 3);
    CHECK(r.path == std::vector<Vertex>{1, 0, 3});
    auto stuck = greedy_route(CategorySystem(3, {{1, 2}, {2}}), make_path(3), 2, 0);
    CHECK_FALSE(stuck.delivered());
    CHECK(stuck.stuck == Vertex{2});
}

TEST_CASE("route_all_pairs") {
    auto rep = route_all_pairs(path_system(5), make_path(5));
    CHECK(rep.pairs.size() == 20);
    CHECK(rep.failures.empty());
    CHECK(rep.max_stretch == doctest::Approx(1.0));
    auto grid = route_all_pairs(grid_system(3, 3), make_grid(3, 3));
    CHECK(grid.failures.empty());
    CHECK(grid.max_stretch == doctest::Approx(1.0));
    auto g = make_random_tree(30, 2);
    auto sys = tree_system(TreeDecorated::from_graph(g));
    auto sample = route_all_pairs(sys, g, PairSample{25, 9});
    CHECK(sample.pairs.size() == 25);
    auto again = route_all_pairs(sys, g, PairSample{25, 9});
    for (std::size_t i = 0; i < 25; ++i) {
        CHECK(sample.pairs[i].s == again.pairs[i].s);
        CHECK(sample.pairs[i].t == again.pairs[i].t);
        CHECK(sample.pairs[i].s != sample.pairs[i].t);
    }
    CHECK(std::is_sorted(sample.pairs.begin(), sample.pairs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.s, a.t) < std::tie(b.s, b.t);
    }));
}

TEST_CASE("property: random systems agree with the naive oracle") {
    std::mt19937 rng(11);
    std::size_t good_seen = 0;
    for (int round = 0; round < 300; ++round) {
        Graph g = round % 2 ? make_random_tree(5 + round % 4, round) : make_random_connected(6, 5 + round % 6, round);
        auto sys = random_system(g, 4 + rng() % 14, rng);
        auto sets = oracle::as_sets(sys);
        const std::size_t n = g.num_vertices();
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t) CHECK(cdist(sys, s, t) == oracle::cdist(sets, s, t));
        CHECK(memdim(sys) == oracle::memdim(sets, n));
        auto report = is_good(sys, g);
        CHECK(report.good == oracle::is_good(sets, g));
        CHECK(report.good == (report.counterexamples.empty() && report.connectivity_violations.empty()));

        // Order independence.
        auto cats = sys.categories();
        std::shuffle(cats.begin(), cats.end(), rng);
        CHECK(is_good(CategorySystem(n, cats), g).good == report.good);
        // Rebuilding from the categories reproduces the index.
        CHECK(CategorySystem(n, sys.categories()) == sys);

        if (!report.good) continue;
        ++good_seen;
        CHECK(memdim(sys) >= diameter(g));
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t) {
                auto r = greedy_route(sys, g, s, t);
                CHECK(r.delivered());
                CHECK(r.length() <= cdist(sys, s, t));
                CHECK(cdist(sys, s, t) <= memdim(sys));
            }
    }
    MESSAGE("good random systems seen: " << good_seen);
}

TEST_CASE("property: cdist vanishes when cat(t) is contained in cat(u)") {
    auto sys = tree_system(TreeDecorated::from_graph(make_random_tree(40, 5)));
    for (Vertex u = 0; u < 40; ++u)
        for (Vertex t = 0; t < 40; ++t) {
            const auto& a = sys.memberships(u);
            const auto& b = sys.memberships(t);
            if (std::includes(a.begin(), a.end(), b.begin(), b.end())) CHECK(cdist(sys, u, t) == 0);
        }
}
