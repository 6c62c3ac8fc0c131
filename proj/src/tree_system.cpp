#include "catroute/constructions.hpp"

#include <algorithm>
#include <queue>

namespace catroute {

namespace {

/// A connected vertex subset of the tree; membership tested via a stamp so
/// that nested subproblems can share one scratch array.
class Subtree {
public:
    explicit Subtree(const Graph& tree) : tree_(tree), stamp_(tree.num_vertices(), 0) {}

    const Graph& tree() const { return tree_; }

    std::size_t enter(const std::vector<Vertex>& verts) {
        ++epoch_;
        for (Vertex v : verts) stamp_[v] = epoch_;
        return epoch_;
    }
    bool inside(Vertex v, std::size_t epoch) const { return stamp_[v] == epoch; }

private:
    const Graph& tree_;
    std::vector<std::size_t> stamp_;
    std::size_t epoch_ = 0;
};

/// Vertices reachable from `start` inside the current subproblem without
/// passing through `blocked`.
std::vector<Vertex> component(const Subtree& sub, std::size_t epoch, Vertex start, Vertex blocked) {
    std::vector<Vertex> out{start};
    std::vector<Vertex> stack{start};
    std::vector<Vertex> parents{blocked};
    while (!stack.empty()) {
        Vertex u = stack.back();
        Vertex parent = parents.back();
        stack.pop_back();
        parents.pop_back();
        for (Vertex w : sub.tree().neighbors(u)) {
            if (w == parent || !sub.inside(w, epoch)) continue;
            out.push_back(w);
            stack.push_back(w);
            parents.push_back(u);
        }
    }
    return out;
}

Vertex centroid(const Subtree& sub, std::size_t epoch, const std::vector<Vertex>& verts) {
    // Iterative DFS from verts[0] for parent pointers and subtree sizes.
    const Vertex root = verts.front();
    std::vector<Vertex> order;
    std::vector<std::pair<Vertex, Vertex>> stack{{root, root}};
    std::vector<Vertex> parent(sub.tree().num_vertices());
    while (!stack.empty()) {
        auto [u, p] = stack.back();
        stack.pop_back();
        parent[u] = p;
        order.push_back(u);
        for (Vertex w : sub.tree().neighbors(u))
            if (w != p && sub.inside(w, epoch)) stack.emplace_back(w, u);
    }
    std::vector<std::size_t> size(sub.tree().num_vertices(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != root) size[parent[*it]] += size[*it];

    const std::size_t n = verts.size();
    Vertex best = root;
    std::size_t best_load = n;
    for (Vertex u : order) {
        std::size_t load = n - size[u];
        for (Vertex w : sub.tree().neighbors(u))
            if (w != parent[u] && sub.inside(w, epoch)) load = std::max(load, size[w]);
        if (load < best_load || (load == best_load && u < best)) {
            best_load = load;
            best = u;
        }
    }
    return best;
}

RoutingCut cut_subtree(Subtree& sub, const std::vector<Vertex>& verts) {
    const std::size_t epoch = sub.enter(verts);
    const std::size_t n = verts.size();
    const Vertex r = centroid(sub, epoch, verts);

    struct Piece {
        Vertex neighbor;
        std::vector<Vertex> members;
    };
    std::vector<Piece> pieces;
    for (Vertex w : sub.tree().neighbors(r))
        if (sub.inside(w, epoch)) pieces.push_back({w, component(sub, epoch, w, r)});
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.members.size() > b.members.size(); });

    // Take pieces (largest first) until the left side holds (n-1)/3 non-cut
    // vertices. Every piece has at most n/2 vertices, so both sides end up
    // within [n/3, 2n/3].
    RoutingCut cut;
    cut.r = r;
    cut.left_tree.push_back(r);
    cut.right_tree.push_back(r);
    std::size_t taken = 0;
    for (auto& piece : pieces) {
        const bool to_left = 3 * taken < n - 1;
        if (to_left) taken += piece.members.size();
        (to_left ? cut.left : cut.right).push_back(piece.neighbor);
        auto& side = to_left ? cut.left_tree : cut.right_tree;
        side.insert(side.end(), piece.members.begin(), piece.members.end());
    }
    for (auto* v : {&cut.left, &cut.right, &cut.left_tree, &cut.right_tree}) std::sort(v->begin(), v->end());
    return cut;
}

struct Builder {
    Subtree sub;
    std::size_t max_depth = 0;

    explicit Builder(const Graph& tree) : sub(tree) {}

    /// Distance to r for every vertex of `side` (a subtree containing r).
    std::vector<std::size_t> distances_from(Vertex r, const std::vector<Vertex>& side,
                                            std::vector<std::size_t>& dist) {
        const std::size_t epoch = sub.enter(side);
        std::vector<Vertex> queue{r};
        dist[r] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex u = queue[i];
            for (Vertex w : sub.tree().neighbors(u)) {
                if (sub.inside(w, epoch) && dist[w] == npos) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        std::vector<std::size_t> out;
        out.reserve(side.size());
        for (Vertex v : side) out.push_back(dist[v]);
        for (Vertex v : side) dist[v] = npos;
        return out;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Categories routing from `from_side` towards r whenever the target is
    /// in `to_side`: to_side plus the ball of radius k around r in from_side,
    /// k = 0 .. ecc(r) - 1.
    void add_cut_categories(const std::vector<Vertex>& to_side, const std::vector<Vertex>& from_side,
                            const std::vector<std::size_t>& depth, std::vector<Category>& out) {
        const std::size_t ecc = *std::max_element(depth.begin(), depth.end());
        for (std::size_t k = 0; k < ecc; ++k) {
            Category c = to_side;
            for (std::size_t i = 0; i < from_side.size(); ++i)
                if (depth[i] <= k) c.push_back(from_side[i]);
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            out.push_back(std::move(c));
        }
    }

    std::vector<Category> build(const std::vector<Vertex>& verts, std::size_t level,
                                std::vector<std::size_t>& dist) {
        if (verts.size() <= 1) return {};
        if (verts.size() == 2) return {{verts[1]}, {verts[0]}};
        max_depth = std::max(max_depth, level);

        RoutingCut cut = cut_subtree(sub, verts);
        const Vertex r = cut.r;
        std::vector<Category> out;
        add_cut_categories(cut.left_tree, cut.right_tree, distances_from(r, cut.right_tree, dist), out);
        add_cut_categories(cut.right_tree, cut.left_tree, distances_from(r, cut.left_tree, dist), out);

        auto left = build(cut.left_tree, level + 1, dist);
        auto right = build(cut.right_tree, level + 1, dist);

        // Categories through r from the two halves are needed only inside
        // their own half, so they can be paired up and unioned.
        auto has_r = [r](const Category& c) { return std::binary_search(c.begin(), c.end(), r); };
        std::vector<Category> left_r, right_r, rest;
        for (auto& c : left) (has_r(c) ? left_r : rest).push_back(std::move(c));
        for (auto& c : right) (has_r(c) ? right_r : rest).push_back(std::move(c));
        const std::size_t paired = std::min(left_r.size(), right_r.size());
        for (std::size_t i = 0; i < paired; ++i) {
            Category merged;
            std::set_union(left_r[i].begin(), left_r[i].end(), right_r[i].begin(), right_r[i].end(),
                           std::back_inserter(merged));
            out.push_back(std::move(merged));
        }
        for (std::size_t i = paired; i < left_r.size(); ++i) out.push_back(std::move(left_r[i]));
        for (std::size_t i = paired; i < right_r.size(); ++i) out.push_back(std::move(right_r[i]));
        for (auto& c : rest) out.push_back(std::move(c));
        return out;
    }
};

}  // namespace

RoutingCut balanced_routing_cut(const TreeDecorated& t) {
    const std::size_t n = t.graph.num_vertices();
    if (n < 3) throw InvalidArgument("balanced_routing_cut needs a tree with at least 3 vertices");
    Subtree sub(t.graph);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return cut_subtree(sub, all);
}

TreeSystemResult build_tree_system(const TreeDecorated& t) {
    const std::size_t n = t.graph.num_vertices();
    Builder builder(t.graph);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    std::vector<std::size_t> dist(n, Builder::npos);
    auto cats = builder.build(all, 1, dist);
    return TreeSystemResult{CategorySystem(n, std::move(cats)), builder.max_depth};
}

CategorySystem tree_system(const TreeDecorated& t) { return build_tree_system(t).system; }

}  // namespace catroute
