#include "catroute/constructions.hpp"

#include "catroute/bounds.hpp"

#include <algorithm>
#include <bit>

namespace catroute {

namespace {

std::size_t ceil_log2(std::size_t x) {
    return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

Category range(Vertex first, Vertex last_inclusive) {
    Category c;
    for (Vertex v = first; v <= last_inclusive; ++v) c.push_back(v);
    return c;
}

}  // namespace

CategorySystem path_system(std::size_t n) {
    if (n < 2) throw InvalidArgument("path_system needs n >= 2");
    std::vector<Category> cats;
    for (Vertex j = 1; j < n; ++j) cats.push_back(range(j, n - 1));
    for (Vertex j = 0; j + 1 < n; ++j) cats.push_back(range(0, j));
    return CategorySystem(n, std::move(cats));
}

CategorySystem cycle_system(std::size_t k) {
    if (k < 3) throw InvalidArgument("cycle_system needs k >= 3");
    const std::size_t arc = (k + 1) / 2;
    std::vector<Category> cats;
    for (Vertex start = 0; start < k; ++start) {
        Category c;
        for (std::size_t j = 0; j < arc; ++j) c.push_back((start + j) % k);
        cats.push_back(std::move(c));
    }
    return CategorySystem(k, std::move(cats));
}

CategorySystem product_system(const CategorySystem& sys_g, const Graph& g,
                              const CategorySystem& sys_h, const Graph& h) {
    const std::size_t ng = g.num_vertices();
    const std::size_t nh = h.num_vertices();
    if (sys_g.num_vertices() != ng || sys_h.num_vertices() != nh)
        throw InvalidArgument("product_system: system does not match its graph");
    std::vector<Category> cats;
    cats.reserve(sys_g.size() + sys_h.size());
    for (const auto& c : sys_g.categories()) {
        Category lifted;
        lifted.reserve(c.size() * nh);
        for (Vertex u : c)
            for (Vertex x = 0; x < nh; ++x) lifted.push_back(u * nh + x);
        cats.push_back(std::move(lifted));
    }
    for (const auto& c : sys_h.categories()) {
        Category lifted;
        lifted.reserve(c.size() * ng);
        for (Vertex u = 0; u < ng; ++u)
            for (Vertex x : c) lifted.push_back(u * nh + x);
        cats.push_back(std::move(lifted));
    }
    return CategorySystem(ng * nh, std::move(cats));
}

CategorySystem grid_system(std::size_t a, std::size_t b) {
    return product_system(path_system(a), make_path(a), path_system(b), make_path(b));
}

CategorySystem torus_system(std::size_t k, std::size_t l) {
    return product_system(cycle_system(k), make_cycle(k), cycle_system(l), make_cycle(l));
}

CategorySystem hypercube_system(std::size_t d) {
    if (d < 1) throw InvalidArgument("hypercube_system needs d >= 1");
    const Graph edge = make_path(2);
    const CategorySystem edge_sys = path_system(2);
    Graph g = edge;
    CategorySystem sys = edge_sys;
    for (std::size_t i = 1; i < d; ++i) {
        sys = product_system(sys, g, edge_sys, edge);
        g = cross_product(g, edge);
    }
    return sys;
}

CategorySystem star_binary_system(std::size_t leaves) {
    if (leaves < 1) throw InvalidArgument("star_binary_system needs l >= 1");
    if (leaves == 1) return path_system(2);
    const std::size_t n = 1 + leaves;
    std::vector<Category> cats;
    for (Vertex leaf = 1; leaf < n; ++leaf) cats.push_back({leaf});
    for (std::size_t bit = 0; bit < ceil_log2(leaves); ++bit) {
        Category zero{0};
        Category one{0};
        for (std::size_t i = 0; i < leaves; ++i) ((i >> bit) & 1U ? one : zero).push_back(1 + i);
        cats.push_back(std::move(zero));
        cats.push_back(std::move(one));
    }
    return CategorySystem(n, std::move(cats));
}

std::vector<std::uint64_t> antichain_codes(std::size_t leaves) {
    const std::size_t k = antichain_k(leaves);
    if (k > 64) throw InvalidArgument("antichain codes longer than 64 bits are not supported");
    const std::size_t weight = k / 2;
    // string[h] is position h; next_permutation walks the strings in
    // lexicographic order starting from 0...01...1.
    std::vector<char> string(k, 0);
    std::fill(string.end() - static_cast<std::ptrdiff_t>(weight), string.end(), 1);
    std::vector<std::uint64_t> codes;
    codes.reserve(leaves);
    do {
        std::uint64_t mask = 0;
        for (std::size_t h = 0; h < k; ++h)
            if (string[h]) mask |= std::uint64_t{1} << h;
        codes.push_back(mask);
    } while (codes.size() < leaves && std::next_permutation(string.begin(), string.end()));
    return codes;
}

CategorySystem star_antichain_system(std::size_t leaves) {
    if (leaves < 2) throw InvalidArgument("star_antichain_system needs l >= 2");
    const std::size_t k = antichain_k(leaves);
    const auto codes = antichain_codes(leaves);
    const std::size_t n = 1 + leaves;
    std::vector<Category> cats;
    for (std::size_t h = 0; h < k; ++h) {
        Category c{0};
        for (std::size_t i = 0; i < leaves; ++i)
            if ((codes[i] >> h) & 1U) c.push_back(1 + i);
        cats.push_back(std::move(c));
    }
    for (Vertex leaf = 1; leaf < n; ++leaf) cats.push_back({leaf});
    return CategorySystem(n, std::move(cats));
}

CategorySystem long_star_system(std::size_t leaves, std::size_t arm_length) {
    if (leaves < 1 || arm_length < 1) throw InvalidArgument("long_star_system needs l >= 1 and d >= 1");
    const std::size_t d = arm_length;
    if (leaves == 1) return path_system(1 + d);
    const std::size_t n = 1 + leaves * d;
    auto at = [d](std::size_t arm, std::size_t depth) -> Vertex { return 1 + arm * d + depth - 1; };

    std::vector<Category> cats;
    for (std::size_t bit = 0; bit < ceil_log2(leaves); ++bit) {
        for (std::size_t copy = 1; copy <= d; ++copy) {
            for (unsigned value : {0U, 1U}) {
                Category c{0};
                for (std::size_t arm = 0; arm < leaves; ++arm) {
                    const bool full = ((arm >> bit) & 1U) == value;
                    const std::size_t reach = full ? d : copy - 1;
                    for (std::size_t depth = 1; depth <= reach; ++depth) c.push_back(at(arm, depth));
                }
                cats.push_back(std::move(c));
            }
        }
    }
    for (std::size_t arm = 0; arm < leaves; ++arm)
        for (std::size_t len = 1; len <= d; ++len) cats.push_back(range(at(arm, d - len + 1), at(arm, d)));
    return CategorySystem(n, std::move(cats));
}

CategorySystem general_system(const Graph& g) { return tree_system(spanning_tree(g)); }

CategorySystem clique_wand_system(std::size_t outer, std::size_t clique, std::size_t path_length) {
    if (outer < 1 || clique < 2 || path_length < 1)
        throw InvalidArgument("clique_wand_system needs n >= 1, delta >= 2, diam >= 1");
    const std::size_t n = clique + outer + path_length;
    const Vertex first_outer = clique;
    const Vertex first_path = clique + outer;

    // Chain of units: U_0 = outer set plus clique minus u_0, U_1 = {u_0},
    // then one unit per pendant path vertex. Prefix/suffix categories over
    // this chain carry every route that crosses between units.
    std::vector<std::vector<Vertex>> units;
    {
        std::vector<Vertex> blob;
        for (Vertex u = 1; u < clique; ++u) blob.push_back(u);
        for (Vertex o = first_outer; o < first_path; ++o) blob.push_back(o);
        units.push_back(std::move(blob));
        units.push_back({0});
        for (Vertex p = first_path; p < n; ++p) units.push_back({p});
    }
    std::vector<Category> cats;
    const std::size_t m = units.size();
    for (std::size_t j = 1; j < m; ++j) {
        Category c;
        for (std::size_t i = j; i < m; ++i) c.insert(c.end(), units[i].begin(), units[i].end());
        cats.push_back(std::move(c));
    }
    for (std::size_t j = 0; j + 1 < m; ++j) {
        Category c;
        for (std::size_t i = 0; i <= j; ++i) c.insert(c.end(), units[i].begin(), units[i].end());
        cats.push_back(std::move(c));
    }

    // Outer vertices are split into contiguous groups, one per clique vertex
    // u_1..u_{delta-1} (the home). Every category of an outer vertex holds
    // its home, so the home is strictly closer to it than any other outer
    // vertex; within a group the members' strings form an antichain.
    const std::size_t homes = clique - 1;
    const std::size_t group_size = (outer + homes - 1) / homes;
    for (std::size_t first = 0; first < outer; first += group_size) {
        const Vertex home = 1 + first / group_size;
        const std::size_t members = std::min(group_size, outer - first);
        if (members == 1) {
            // A lone member still needs one category shared with its home.
            cats.push_back({home, first_outer + first});
            continue;
        }
        const auto codes = antichain_codes(members);
        const std::size_t k = antichain_k(members);
        for (std::size_t h = 0; h < k; ++h) {
            Category c{home};
            for (std::size_t i = 0; i < members; ++i)
                if ((codes[i] >> h) & 1U) c.push_back(first_outer + first + i);
            if (c.size() > 1) cats.push_back(std::move(c));
        }
    }

    for (Vertex v : units[0]) cats.push_back({v});
    return CategorySystem(n, std::move(cats));
}

}  // namespace catroute
