#include "catroute/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace catroute {

std::size_t lb_diameter(const Graph& g) { return diameter(g); }

std::size_t lb_degree_tree(const TreeDecorated& t) {
    if (!is_tree(t.graph)) throw InvalidArgument("lb_degree_tree needs a tree");
    std::size_t best = 0;
    for (Vertex v = 0; v < t.graph.num_vertices(); ++v) {
        std::size_t deg = t.graph.degree(v);
        std::size_t bits = deg <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(deg - 1));
        best = std::max(best, bits);
    }
    return best;
}

std::size_t antichain_k(std::uint64_t leaves) {
    if (leaves < 1) throw InvalidArgument("antichain_k needs l >= 1");
    using boost::multiprecision::cpp_int;
    const cpp_int target = leaves;
    // central = C(k, floor(k/2)), updated exactly as k grows.
    cpp_int central = 1;  // C(1, 0)
    std::size_t k = 1;
    while (central < target) {
        const std::size_t j = k / 2;
        if (k % 2 == 0) {
            // C(k+1, j) = C(k, j) * (k+1) / (k+1-j)
            central = central * (k + 1) / (k + 1 - j);
        } else {
            // C(k+1, j+1) = C(k, j) * (k+1) / (j+1)
            central = central * (k + 1) / (j + 1);
        }
        ++k;
    }
    return k;
}

double star_center_lb(std::uint64_t leaves, std::uint64_t arm_length) {
    if (arm_length < 1) throw InvalidArgument("star_center_lb needs d >= 1");
    if (arm_length == 1) return static_cast<double>(antichain_k(leaves));
    if (leaves < 3) throw InvalidArgument("star_center_lb needs l >= 3 for d >= 2");
    const double l = static_cast<double>(leaves);
    const double d = static_cast<double>(arm_length);
    const double denominator = 32.0 * (std::log(d) + std::log(std::log(l)));
    if (!(denominator > 0.0)) throw InvalidArgument("star_center_lb: non-positive denominator");
    return d * std::log(l) / denominator;
}

UniversalBound universal_lb(double n, double average_degree, std::size_t diam) {
    if (!(n >= 1.0) || !(average_degree >= 1.0) || diam < 1)
        throw InvalidArgument("universal_lb needs n >= 1, delta >= 1, diam >= 1");
    UniversalBound out;
    out.certified = diam;
    out.indicative = static_cast<double>(diam) + std::log2(n) / std::log2(std::max(2.0, average_degree));
    return out;
}

BoundsReport bounds_report(const Graph& g, const CategorySystem* sys) {
    if (sys && sys->num_vertices() != g.num_vertices())
        throw InvalidArgument("category system and graph disagree on the vertex count");
    BoundsReport report;
    report.n = g.num_vertices();
    report.diameter = diameter(g);
    report.average_degree = g.average_degree();

    report.certified.push_back({"diameter", static_cast<double>(report.diameter)});
    if (is_tree(g))
        report.certified.push_back(
            {"tree_degree", static_cast<double>(lb_degree_tree(TreeDecorated{g, std::nullopt}))});
    if (auto star = detect_star(g)) {
        report.certified.push_back({"star_antichain", static_cast<double>(antichain_k(star->leaves))});
        if (star->arm_length >= 2)
            report.certified.push_back({"star_center", star_center_lb(star->leaves, star->arm_length)});
    }
    if (report.diameter >= 1 && report.average_degree >= 1.0) {
        auto u = universal_lb(static_cast<double>(report.n), report.average_degree, report.diameter);
        report.indicative.push_back({"universal", u.indicative});
    }
    if (sys) report.achieved = memdim(*sys);
    return report;
}

}  // namespace catroute
