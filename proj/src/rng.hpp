#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace catroute::detail {

// std::uniform_int_distribution differs between standard libraries; this
// keeps seeded output identical everywhere mt19937_64 is.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace catroute::detail
