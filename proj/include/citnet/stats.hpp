#pragma once

#include "citnet/network.hpp"

#include <cstddef>
#include <map>

namespace citnet {

// Whole-network characteristics as tabulated for citation networks.
struct NetworkStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t loops = 0;             // m0
    std::size_t isolated = 0;          // n0: vertices without any incident arc
    std::size_t largest_weak = 0;      // nC
    std::size_t nontrivial_weak = 0;   // kC: weak components with >= 2 vertices
    std::size_t depth = 0;             // h: vertices on a longest path of the condensation
    std::size_t max_in_degree = 0;
    std::size_t max_out_degree = 0;
    std::map<std::size_t, std::size_t> scc_size_counts;  // size (>= 2) -> count

    friend bool operator==(const NetworkStats&, const NetworkStats&) = default;
};

// Works on cyclic networks too: depth is measured on the shrunk network.
NetworkStats network_stats(const Network& net);

// Weak components, numbered by smallest member.
std::vector<std::size_t> weak_components(const Network& net, std::size_t* count = nullptr);

}  // namespace citnet
