#include "citnet/generators.hpp"

#include "citnet/errors.hpp"

#include <cmath>
#include <random>

namespace citnet {

Network complete_acyclic(std::size_t n) {
    if (n < 2) throw ArgumentError("complete_acyclic needs n >= 2");
    std::vector<Arc> arcs;
    arcs.reserve(n * (n - 1) / 2);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) arcs.push_back({i, j, 1.0});
    }
    return Network::with_vertex_count(n, std::move(arcs));
}

Network random_dag(std::size_t n, double density, std::uint64_t seed) {
    if (n < 2) throw ArgumentError("random_dag needs n >= 2");
    if (!(density > 0.0 && density <= 1.0)) throw ArgumentError("random_dag density must lie in (0, 1]");

    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(density * static_cast<double>(pairs) * 1.05) + 16);

    std::mt19937_64 rng(seed);
    const double log_miss = std::log1p(-density);
    auto gap = [&]() -> std::uint64_t {
        if (density >= 1.0) return 0;
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double g = std::floor(std::log1p(-u) / log_miss);
        return g >= static_cast<double>(pairs) ? pairs : static_cast<std::uint64_t>(g);
    };

    // walk pairs by linear index k, mapping back to (i, j) incrementally
    std::uint64_t k = gap();
    VertexId i = 0;
    std::uint64_t row_start = 0;  // linear index of (i, i+1)
    while (k < pairs) {
        while (k >= row_start + (n - 1 - i)) {
            row_start += n - 1 - i;
            ++i;
        }
        const auto j = static_cast<VertexId>(i + 1 + (k - row_start));
        arcs.push_back({i, j, 1.0});
        k += 1 + gap();
    }
    return Network::with_vertex_count(n, std::move(arcs));
}

}  // namespace citnet
