#include "catroute/category_system.hpp"

#include "rng.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace catroute {

CategorySystem::CategorySystem(std::size_t n, std::vector<Category> categories)
    : categories_(std::move(categories)), membership_(n) {
    for (std::size_t i = 0; i < categories_.size(); ++i) {
        auto& c = categories_[i];
        if (c.empty()) throw InvalidArgument("category " + std::to_string(i) + " is empty");
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.back() >= n)
            throw InvalidArgument("category " + std::to_string(i) + " contains vertex " +
                                  std::to_string(c.back()) + " outside 0.." +
                                  std::to_string(n == 0 ? 0 : n - 1));
        for (Vertex v : c) membership_[v].push_back(i);
    }
}

const std::vector<std::size_t>& CategorySystem::memberships(Vertex v) const {
    if (v >= membership_.size())
        throw InvalidArgument("vertex id " + std::to_string(v) + " out of range");
    return membership_[v];
}

bool CategorySystem::contains(std::size_t category_index, Vertex v) const {
    const auto& c = categories_.at(category_index);
    return std::binary_search(c.begin(), c.end(), v);
}

std::size_t cdist(const CategorySystem& sys, Vertex u, Vertex t) {
    const auto& cu = sys.memberships(u);
    const auto& ct = sys.memberships(t);
    std::size_t shared = 0;
    auto a = cu.begin();
    auto b = ct.begin();
    while (a != cu.end() && b != ct.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++shared;
            ++a;
            ++b;
        }
    }
    return ct.size() - shared;
}

std::vector<std::size_t> cdist_to(const CategorySystem& sys, Vertex t) {
    const auto& ct = sys.memberships(t);
    std::vector<std::size_t> dist(sys.num_vertices(), ct.size());
    for (std::size_t c : ct)
        for (Vertex v : sys.category(c)) --dist[v];
    return dist;
}

std::size_t memdim(const CategorySystem& sys) {
    std::size_t best = 0;
    for (Vertex v = 0; v < sys.num_vertices(); ++v) best = std::max(best, sys.memberships(v).size());
    return best;
}

std::vector<std::size_t> validate_connected(const CategorySystem& sys, const Graph& g) {
    if (sys.num_vertices() > g.num_vertices())
        throw InvalidArgument("category system references vertices beyond the graph");
    std::vector<std::size_t> bad;
    // inside[v] == i + 1 marks v as a member of category i.
    std::vector<std::size_t> inside(g.num_vertices(), 0);
    std::vector<std::size_t> seen(g.num_vertices(), 0);
    std::vector<Vertex> stack;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& c = sys.category(i);
        const std::size_t mark = i + 1;
        for (Vertex v : c) inside[v] = mark;
        stack.assign(1, c.front());
        seen[c.front()] = mark;
        std::size_t reached = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (inside[w] == mark && seen[w] != mark) {
                    seen[w] = mark;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != c.size()) bad.push_back(i);
    }
    return bad;
}

GoodnessReport is_good(const CategorySystem& sys, const Graph& g) {
    if (sys.num_vertices() != g.num_vertices())
        throw InvalidArgument("category system and graph disagree on the vertex count");
    GoodnessReport report;
    report.connectivity_violations = validate_connected(sys, g);
    const std::size_t n = g.num_vertices();
    for (Vertex t = 0; t < n; ++t) {
        auto dist = cdist_to(sys, t);
        for (Vertex s = 0; s < n; ++s) {
            if (s == t) continue;
            bool progress = false;
            for (Vertex v : g.neighbors(s)) {
                if (dist[v] < dist[s]) {
                    progress = true;
                    break;
                }
            }
            if (!progress) report.counterexamples.push_back({s, t});
        }
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.good = report.counterexamples.empty() && report.connectivity_violations.empty();
    return report;
}

namespace {

Route route_with(const std::vector<std::size_t>& dist, const Graph& g, Vertex s, Vertex t) {
    Route route;
    route.path.push_back(s);
    Vertex cur = s;
    while (cur != t) {
        Vertex best = cur;
        std::size_t best_dist = dist[cur];
        for (Vertex v : g.neighbors(cur)) {
            if (dist[v] < best_dist) {
                best_dist = dist[v];
                best = v;
            }
        }
        if (best == cur) {
            route.stuck = cur;
            break;
        }
        cur = best;
        route.path.push_back(cur);
    }
    return route;
}

}  // namespace

Route greedy_route(const CategorySystem& sys, const Graph& g, Vertex s, Vertex t) {
    if (s >= g.num_vertices() || t >= g.num_vertices())
        throw InvalidArgument("route endpoint out of range");
    if (sys.num_vertices() != g.num_vertices())
        throw InvalidArgument("category system and graph disagree on the vertex count");
    return route_with(cdist_to(sys, t), g, s, t);
}

RoutingReport route_all_pairs(const CategorySystem& sys, const Graph& g,
                              std::optional<PairSample> sample) {
    if (sys.num_vertices() != g.num_vertices())
        throw InvalidArgument("category system and graph disagree on the vertex count");
    const std::size_t n = g.num_vertices();
    const std::size_t total = n * (n - 1);

    // Sources grouped per target, so cdist and BFS run once per target.
    std::map<Vertex, std::vector<Vertex>> by_target;
    if (!sample || sample->budget >= total) {
        for (Vertex t = 0; t < n; ++t)
            for (Vertex s = 0; s < n; ++s)
                if (s != t) by_target[t].push_back(s);
    } else {
        std::mt19937_64 rng(sample->seed);
        std::set<OrderedPair> chosen;
        while (chosen.size() < sample->budget) {
            std::uint64_t k = detail::uniform_below(rng, total);
            Vertex s = k / (n - 1);
            Vertex t = k % (n - 1);
            if (t >= s) ++t;
            chosen.insert({s, t});
        }
        for (auto [s, t] : chosen) by_target[t].push_back(s);
    }

    RoutingReport report;
    for (auto& [t, sources] : by_target) {
        auto dist = cdist_to(sys, t);
        auto hops = bfs_distances(g, t);
        for (Vertex s : sources) {
            Route r = route_with(dist, g, s, t);
            if (r.delivered())
                report.pairs.push_back({s, t, r.length(), hops[s]});
            else
                report.failures.push_back({s, t, *r.stuck});
        }
    }
    auto by_pair = [](const auto& a, const auto& b) { return std::tie(a.s, a.t) < std::tie(b.s, b.t); };
    std::sort(report.pairs.begin(), report.pairs.end(), by_pair);
    std::sort(report.failures.begin(), report.failures.end(), by_pair);

    double sum = 0.0;
    for (const auto& p : report.pairs) {
        report.max_stretch = std::max(report.max_stretch, p.stretch());
        sum += p.stretch();
    }
    if (!report.pairs.empty()) report.mean_stretch = sum / static_cast<double>(report.pairs.size());
    return report;
}

}  // namespace catroute
