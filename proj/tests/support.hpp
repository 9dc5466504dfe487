#pragma once

#include <legendrid/grid.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace legendrid::testkit {

inline constexpr int kPropertyInstances = 10'000;

/// Uniform over knot diagrams of size n with random direction (rejection
/// sampling on pairs of permutations).
inline OrientedGridDiagram random_diagram(std::mt19937_64 &rng, int n) {
    std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
    std::iota(x.begin(), x.end(), 0);
    std::iota(o.begin(), o.end(), 0);
    for (;;) {
        std::shuffle(x.begin(), x.end(), rng);
        std::shuffle(o.begin(), o.end(), rng);
        bool clash = false;
        for (int i = 0; i < n; ++i)
            clash |= x[static_cast<std::size_t>(i)] == o[static_cast<std::size_t>(i)];
        if (clash || GridDiagram::count_components(x, o) != 1)
            continue;
        const auto dir = rng() & 1 ? Direction::XtoO : Direction::OtoX;
        return OrientedGridDiagram::validate(n, x, o, dir);
    }
}

inline OrientedGridDiagram random_diagram(std::mt19937_64 &rng, int lo, int hi) {
    return random_diagram(rng, std::uniform_int_distribution<int>(lo, hi)(rng));
}

} // namespace legendrid::testkit
