#include "catroute/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace catroute {

namespace {

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

bool connected(const std::vector<std::vector<Vertex>>& adjacency) {
    if (adjacency.empty()) return true;
    std::vector<char> seen(adjacency.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : adjacency[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == adjacency.size();
}

}  // namespace

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0) throw InvalidArgument("graph must have at least one vertex");
    Graph g;
    g.adjacency_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references a vertex outside 0.." + std::to_string(n - 1));
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InvalidArgument("duplicate edge");
    }
    g.num_edges_ = edges.size();
    if (!connected(g.adjacency_)) throw InvalidArgument("graph is not connected");
    return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (v >= adjacency_.size()) throw InvalidArgument("vertex id " + std::to_string(v) + " out of range");
    return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

double Graph::average_degree() const noexcept {
    if (adjacency_.empty()) return 0.0;
    return 2.0 * static_cast<double>(num_edges_) / static_cast<double>(adjacency_.size());
}

bool is_tree(const Graph& g) noexcept {
    return g.num_vertices() > 0 && g.num_edges() + 1 == g.num_vertices();
}

TreeDecorated TreeDecorated::from_graph(Graph g, std::optional<Vertex> root) {
    if (!is_tree(g)) throw InvalidArgument("graph is not a tree");
    if (root && *root >= g.num_vertices()) throw InvalidArgument("tree root out of range");
    return TreeDecorated{std::move(g), root};
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    if (source >= g.num_vertices())
        throw InvalidArgument("vertex id " + std::to_string(source) + " out of range");
    std::vector<std::size_t> dist(g.num_vertices(), unreached);
    std::queue<Vertex> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] == unreached) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) out.push_back(bfs_distances(g, v));
    return out;
}

std::size_t eccentricity(const Graph& g, Vertex v) {
    auto dist = bfs_distances(g, v);
    return *std::max_element(dist.begin(), dist.end());
}

std::size_t diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, eccentricity(g, v));
    return best;
}

Vertex eccentricity_center(const Graph& g) {
    if (g.num_vertices() == 0) throw InvalidArgument("empty graph has no center");
    Vertex best = 0;
    std::size_t best_ecc = unreached;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::size_t e = eccentricity(g, v);
        if (e < best_ecc) {
            best_ecc = e;
            best = v;
        }
    }
    return best;
}

TreeDecorated spanning_tree(const Graph& g) {
    Vertex root = eccentricity_center(g);
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Edge> edges;
    edges.reserve(g.num_vertices() - 1);
    std::queue<Vertex> queue;
    seen[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                edges.emplace_back(u, v);
                queue.push(v);
            }
        }
    }
    return TreeDecorated{Graph::from_edges(g.num_vertices(), edges), root};
}

Graph cross_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.num_vertices();
    const std::size_t nh = h.num_vertices();
    if (nh != 0 && ng > std::numeric_limits<std::size_t>::max() / nh)
        throw InvalidArgument("cross product vertex count overflows");
    std::vector<Edge> edges;
    edges.reserve(ng * h.num_edges() + nh * g.num_edges());
    for (auto [u, v] : g.edges())
        for (Vertex x = 0; x < nh; ++x) edges.emplace_back(u * nh + x, v * nh + x);
    for (Vertex u = 0; u < ng; ++u)
        for (auto [x, y] : h.edges()) edges.emplace_back(u * nh + x, u * nh + y);
    return Graph::from_edges(ng * nh, edges);
}

std::optional<StarShape> detect_star(const Graph& g) {
    if (!is_tree(g)) return std::nullopt;
    std::optional<Vertex> center;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::size_t deg = g.degree(v);
        if (deg >= 3) {
            if (center) return std::nullopt;
            center = v;
        }
    }
    if (!center) return std::nullopt;
    const auto& arms = g.neighbors(*center);
    std::size_t arm_length = 0;
    for (Vertex first : arms) {
        std::size_t length = 1;
        Vertex prev = *center;
        Vertex cur = first;
        while (g.degree(cur) == 2) {
            const auto& nb = g.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++length;
        }
        if (arm_length == 0) arm_length = length;
        if (length != arm_length) return std::nullopt;
    }
    return StarShape{*center, arms.size(), arm_length};
}

}  // namespace catroute
