#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catroute/graph.hpp"

namespace catroute {

using Category = std::vector<Vertex>;

/// A multiset of categories over the vertices 0..n-1 of a companion graph,
/// with the per-vertex membership index kept as the exact inverse.
///
/// Categories are stored sorted and deduplicated internally; two categories
/// with identical content are still distinct entries (they are told apart by
/// index, and both count towards cdist and memdim).
class CategorySystem {
public:
    CategorySystem() = default;

    /// Throws InvalidArgument on an empty category or a vertex id >= n.
    CategorySystem(std::size_t n, std::vector<Category> categories);

    std::size_t num_vertices() const noexcept { return membership_.size(); }
    std::size_t size() const noexcept { return categories_.size(); }
    bool empty() const noexcept { return categories_.empty(); }

    const std::vector<Category>& categories() const noexcept { return categories_; }
    const Category& category(std::size_t i) const { return categories_.at(i); }

    /// Indices of the categories containing v, ascending.
    const std::vector<std::size_t>& memberships(Vertex v) const;

    bool contains(std::size_t category_index, Vertex v) const;

    friend bool operator==(const CategorySystem&, const CategorySystem&) = default;

private:
    std::vector<Category> categories_;
    std::vector<std::vector<std::size_t>> membership_;
};

/// Number of categories containing t but not u.
std::size_t cdist(const CategorySystem& sys, Vertex u, Vertex t);

/// cdist(v, t) for every vertex v, in one pass over the categories of t.
std::vector<std::size_t> cdist_to(const CategorySystem& sys, Vertex t);

/// Largest number of categories any single vertex belongs to; 0 if empty.
std::size_t memdim(const CategorySystem& sys);

/// Indices of categories whose induced subgraph in g is disconnected.
std::vector<std::size_t> validate_connected(const CategorySystem& sys, const Graph& g);

struct OrderedPair {
    Vertex s = 0;
    Vertex t = 0;
    friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
    friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

struct GoodnessReport {
    bool good = false;
    /// Ordered pairs (s, t), s != t, where no neighbour of s has smaller cdist to t.
    std::vector<OrderedPair> counterexamples;
    std::vector<std::size_t> connectivity_violations;
};

GoodnessReport is_good(const CategorySystem& sys, const Graph& g);

/// Outcome of one greedy delivery attempt. On failure `stuck` is the vertex
/// with no cdist-decreasing neighbour and `path` ends there.
struct Route {
    std::vector<Vertex> path;
    std::optional<Vertex> stuck;

    bool delivered() const noexcept { return !stuck.has_value(); }
    std::size_t length() const noexcept { return path.empty() ? 0 : path.size() - 1; }
};

/// Forward to the neighbour of minimum cdist to t, lowest id on ties, until t
/// is reached or no neighbour improves.
Route greedy_route(const CategorySystem& sys, const Graph& g, Vertex s, Vertex t);

struct RoutedPair {
    Vertex s = 0;
    Vertex t = 0;
    std::size_t route_length = 0;
    std::size_t distance = 0;

    double stretch() const noexcept {
        return static_cast<double>(route_length) / static_cast<double>(distance);
    }
};

struct RoutingFailure {
    Vertex s = 0;
    Vertex t = 0;
    Vertex stuck = 0;
};

struct RoutingReport {
    std::vector<RoutedPair> pairs;
    std::vector<RoutingFailure> failures;
    double max_stretch = 0.0;
    double mean_stretch = 0.0;
};

struct PairSample {
    std::size_t budget = 0;
    std::uint64_t seed = 0;
};

/// Routes every ordered pair s != t, or `sample->budget` distinct pairs drawn
/// with the given seed. Results are sorted by (s, t).
RoutingReport route_all_pairs(const CategorySystem& sys, const Graph& g,
                              std::optional<PairSample> sample = std::nullopt);

}  // namespace catroute
