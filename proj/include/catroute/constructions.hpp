#pragma once

#include <cstddef>
#include <vector>

#include "catroute/category_system.hpp"
#include "catroute/graph.hpp"

namespace catroute {

/// Suffix categories {j..n-1}, j = 1..n-1, followed by prefix categories
/// {0..j}, j = 0..n-2. Every vertex lies in exactly n-1 of them and cdist
/// equals hop distance.
CategorySystem path_system(std::size_t n);

/// All k arcs of ceil(k/2) consecutive vertices, arc i starting at vertex i.
/// Every vertex lies in exactly ceil(k/2) arcs and cdist equals cycle distance.
CategorySystem cycle_system(std::size_t k);

/// Lifts sys_g to c x V(h) and sys_h to V(g) x c' on cross_product(g, h).
/// Membership dimensions add exactly.
CategorySystem product_system(const CategorySystem& sys_g, const Graph& g,
                              const CategorySystem& sys_h, const Graph& h);

/// Product systems on the generator layouts: path x path, cycle x cycle,
/// and d-fold products of path(2).
CategorySystem grid_system(std::size_t a, std::size_t b);
CategorySystem torus_system(std::size_t k, std::size_t l);
CategorySystem hypercube_system(std::size_t d);

/// Diameter-2 star with one singleton per leaf and a zero/one category pair
/// per bit of the leaf number. Falls back to path_system(2) for one leaf.
CategorySystem star_binary_system(std::size_t leaves);

/// Optimal diameter-2 star system: leaves carry distinct weight-floor(k/2)
/// bitstrings of length k = antichain_k(leaves), lexicographic order; one
/// category per bit (center plus leaves with that bit set) and a singleton
/// per leaf.
CategorySystem star_antichain_system(std::size_t leaves);

/// The weight-floor(k/2) strings handed to the leaves by
/// star_antichain_system, as bitmasks with bit h = string position h.
std::vector<std::uint64_t> antichain_codes(std::size_t leaves);

/// System for make_star(leaves, arm_length): d copies of every bit category
/// pair (copy k also covers depth <= k-1 on the other arms) plus, per arm,
/// the d nested tail segments ending at its leaf.
CategorySystem long_star_system(std::size_t leaves, std::size_t arm_length);

/// Balanced routing cut (r, L, R) of a tree. left_tree / right_tree are the
/// vertex sets of T_L and T_R; both contain r and nothing else in common.
struct RoutingCut {
    Vertex r = 0;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    std::vector<Vertex> left_tree;
    std::vector<Vertex> right_tree;
};

RoutingCut balanced_routing_cut(const TreeDecorated& t);

struct TreeSystemResult {
    CategorySystem system;
    /// Number of nested cut levels, the root call counting as 1.
    std::size_t recursion_depth = 0;
};

TreeSystemResult build_tree_system(const TreeDecorated& t);
CategorySystem tree_system(const TreeDecorated& t);

/// tree_system on spanning_tree(g).
CategorySystem general_system(const Graph& g);

/// System for make_clique_wand(outer, clique, path_length).
CategorySystem clique_wand_system(std::size_t outer, std::size_t clique, std::size_t path_length);

}  // namespace catroute
