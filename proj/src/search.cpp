#include "catroute/bounds.hpp"

#include <algorithm>
#include <bit>

namespace catroute {

namespace {

using Mask = std::uint32_t;

bool connected_subset(const Graph& g, Mask subset) {
    const Mask start = subset & (~subset + 1);
    Mask reached = start;
    Mask frontier = start;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) {
            Vertex v = static_cast<Vertex>(std::countr_zero(f));
            for (Vertex w : g.neighbors(v)) next |= Mask{1} << w;
        }
        next &= subset & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == subset;
}

/// Depth-first enumeration of category multisets in non-decreasing subset
/// index order, with every vertex in at most `cap` categories.
class Search {
public:
    Search(const Graph& g, std::size_t category_cap)
        : g_(g), n_(g.num_vertices()), category_cap_(category_cap), dist_(all_pairs_distances(g)) {
        const Mask full = static_cast<Mask>((std::uint64_t{1} << n_) - 1);
        // The full vertex set separates nothing, so it never helps.
        for (Mask s = 1; s < full; ++s)
            if (connected_subset(g, s)) subsets_.push_back(s);
    }

    /// True when a good system with memdim <= cap exists; the first one in
    /// enumeration order is left in chosen().
    bool run(std::size_t cap) {
        cap_ = cap;
        load_.assign(n_, 0);
        chosen_.clear();
        truncated_ = false;
        return dfs(0);
    }

    const std::vector<Mask>& chosen() const { return chosen_; }
    std::uint64_t nodes() const { return nodes_; }
    bool truncated() const { return truncated_; }

private:
    bool fits(Mask s) const {
        for (Mask f = s; f; f &= f - 1)
            if (load_[static_cast<std::size_t>(std::countr_zero(f))] >= cap_) return false;
        return true;
    }

    // cd[s][t] = number of chosen categories holding t but not s.
    void cdist_table(std::vector<std::vector<std::size_t>>& cd) const {
        cd.assign(n_, std::vector<std::size_t>(n_, 0));
        for (Mask c : chosen_)
            for (Mask ts = c; ts; ts &= ts - 1) {
                Vertex t = static_cast<Vertex>(std::countr_zero(ts));
                for (Vertex s = 0; s < n_; ++s)
                    if (!((c >> s) & 1U)) ++cd[s][t];
            }
    }

    bool good(const std::vector<std::vector<std::size_t>>& cd) const {
        for (Vertex t = 0; t < n_; ++t)
            for (Vertex s = 0; s < n_; ++s) {
                if (s == t) continue;
                bool progress = false;
                for (Vertex v : g_.neighbors(s))
                    if (cd[v][t] < cd[s][t]) {
                        progress = true;
                        break;
                    }
                if (!progress) return false;
            }
        return true;
    }

    /// Necessary condition for some extension from subset index `from` to be
    /// good: every good system has cdist(s, t) >= dist(s, t).
    bool extendable(const std::vector<std::vector<std::size_t>>& cd, std::size_t from) const {
        if (chosen_.size() >= category_cap_) return false;
        std::vector<Mask> common(n_, ~Mask{0});
        std::vector<char> any(n_, 0);
        for (std::size_t i = from; i < subsets_.size(); ++i) {
            const Mask s = subsets_[i];
            if (!fits(s)) continue;
            for (Mask f = s; f; f &= f - 1) {
                auto t = static_cast<std::size_t>(std::countr_zero(f));
                common[t] &= s;
                any[t] = 1;
            }
        }
        for (Vertex t = 0; t < n_; ++t) {
            const std::size_t room = cap_ - load_[t];
            for (Vertex s = 0; s < n_; ++s) {
                if (s == t) continue;
                const bool can_add = any[t] && !((common[t] >> s) & 1U);
                const std::size_t reachable = cd[s][t] + (can_add ? room : 0);
                if (reachable < dist_[s][t]) return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t from) {
        ++nodes_;
        std::vector<std::vector<std::size_t>> cd;
        cdist_table(cd);
        if (good(cd)) return true;
        if (chosen_.size() >= category_cap_) {
            truncated_ = true;
            return false;
        }
        if (!extendable(cd, from)) return false;
        for (std::size_t i = from; i < subsets_.size(); ++i) {
            const Mask s = subsets_[i];
            if (!fits(s)) continue;
            add(s);
            if (dfs(i)) return true;
            remove(s);
        }
        return false;
    }

    void add(Mask s) {
        chosen_.push_back(s);
        for (Mask f = s; f; f &= f - 1) ++load_[static_cast<std::size_t>(std::countr_zero(f))];
    }
    void remove(Mask s) {
        chosen_.pop_back();
        for (Mask f = s; f; f &= f - 1) --load_[static_cast<std::size_t>(std::countr_zero(f))];
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t category_cap_;
    std::vector<std::vector<std::size_t>> dist_;
    std::vector<Mask> subsets_;
    std::size_t cap_ = 0;
    std::vector<std::size_t> load_;
    std::vector<Mask> chosen_;
    std::uint64_t nodes_ = 0;
    bool truncated_ = false;
};

}  // namespace

SearchResult exact_min_memdim(const Graph& g, std::size_t memdim_cap, std::size_t category_cap) {
    const std::size_t n = g.num_vertices();
    if (n > max_search_vertices)
        throw CapExhausted("exhaustive search supports at most " + std::to_string(max_search_vertices) +
                           " vertices, graph has " + std::to_string(n));
    if (memdim_cap == 0 || category_cap == 0) throw InvalidArgument("search caps must be positive");

    SearchResult result;
    if (n == 1) {
        result.witness = CategorySystem(1, {});
        return result;
    }
    Search search(g, category_cap);
    bool incomplete = false;
    for (std::size_t m = lb_diameter(g); m <= memdim_cap; ++m) {
        const bool found = search.run(m);
        result.nodes_explored = search.nodes();
        if (found) {
            if (incomplete)
                throw CapExhausted("category cap " + std::to_string(category_cap) +
                                   " cut the search below memdim " + std::to_string(m));
            std::vector<Category> cats;
            for (Mask s : search.chosen()) {
                Category c;
                for (Mask f = s; f; f &= f - 1) c.push_back(static_cast<Vertex>(std::countr_zero(f)));
                cats.push_back(std::move(c));
            }
            result.optimum = m;
            result.witness = CategorySystem(n, std::move(cats));
            return result;
        }
        incomplete = incomplete || search.truncated();
    }
    throw CapExhausted("no good system with memdim <= " + std::to_string(memdim_cap) +
                       (incomplete ? " within the category cap" : ""));
}

}  // namespace catroute
