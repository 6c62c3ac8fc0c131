#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catroute/category_system.hpp"
#include "catroute/graph.hpp"

namespace catroute {

/// Diameter; no good system can have smaller membership dimension.
std::size_t lb_diameter(const Graph& g);

/// max over v of ceil(log2 deg v). Valid for trees only; throws otherwise.
std::size_t lb_degree_tree(const TreeDecorated& t);

/// Smallest k >= 1 with C(k, floor(k/2)) >= leaves, computed exactly.
std::size_t antichain_k(std::uint64_t leaves);

/// Lower bound on the number of categories holding the center of
/// make_star(leaves, arm_length):
///   d ln l / (32 (ln d + ln ln l))   for d >= 2, l >= 3,
///   antichain_k(l)                   for d == 1.
double star_center_lb(std::uint64_t leaves, std::uint64_t arm_length);

struct UniversalBound {
    std::size_t certified = 0;
    /// diam + log2 n / log2 max(2, delta), constant 1.
    double indicative = 0.0;
};

UniversalBound universal_lb(double n, double average_degree, std::size_t diam);

struct NamedBound {
    std::string name;
    double value = 0.0;
};

struct BoundsReport {
    std::size_t n = 0;
    std::size_t diameter = 0;
    double average_degree = 0.0;
    std::vector<NamedBound> certified;
    std::vector<NamedBound> indicative;
    std::optional<std::size_t> achieved;
};

BoundsReport bounds_report(const Graph& g, const CategorySystem* sys = nullptr);

/// The search hit its memdim cap (or the graph is too large to enumerate).
class CapExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchResult {
    std::size_t optimum = 0;
    CategorySystem witness;
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive minimum membership dimension over all good systems, by
/// iterative deepening on the memdim from lb_diameter(g) to memdim_cap.
/// Throws CapExhausted when no good system exists within the caps.
SearchResult exact_min_memdim(const Graph& g, std::size_t memdim_cap, std::size_t category_cap);

inline constexpr std::size_t max_search_vertices = 16;

}  // namespace catroute
