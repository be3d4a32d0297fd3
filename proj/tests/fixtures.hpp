#pragma once

#include "citnet/generators.hpp"
#include "citnet/network.hpp"

#include <string>
#include <vector>

namespace fixture {

using citnet::Arc;
using citnet::Network;

inline Network labelled(std::vector<std::string> labels, std::vector<Arc> arcs) {
    return Network(std::move(labels), std::move(arcs));
}

// a->b, a->c, b->d, c->d
inline Network diamond() { return labelled({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// a->b->c
inline Network path3() { return labelled({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

inline Network path(std::size_t n) {
    std::vector<Arc> arcs;
    for (citnet::VertexId v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
    return Network::with_vertex_count(n, std::move(arcs));
}

// a->b, a->c, b->c, b->d, c->d
inline Network branch() { return labelled({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

inline Network single_arc() { return labelled({"a", "b"}, {{0, 1}}); }

inline Network two_cycle() { return labelled({"a", "b"}, {{0, 1}, {1, 0}}); }

inline Network three_cycle() { return labelled({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}); }

// one paper (vertex 0) cited by `citers` others
inline Network star(std::size_t citers) {
    std::vector<Arc> arcs;
    for (citnet::VertexId v = 1; v <= citers; ++v) arcs.push_back({0, v});
    return Network::with_vertex_count(citers + 1, std::move(arcs));
}

// Layered network a -> {b, c} -> d -> {e, f}: {(a,b),(a,c)} is a 2-arc minimal cut.
inline Network layered() {
    return labelled({"a", "b", "c", "d", "e", "f"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}});
}

// Small acyclic networks for property checks: the named fixtures, DK_6,
// forty random DAGs and one with unsorted ids and isolated vertices.
inline std::vector<Network> suite() {
    std::vector<Network> nets{diamond(), path3(), branch(), single_arc(), layered(), star(5), citnet::complete_acyclic(6)};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) nets.push_back(citnet::random_dag(4 + seed % 7, 0.3, seed));
    nets.push_back(Network::with_vertex_count(6, {{4, 1}, {1, 0}, {4, 0}, {3, 5}}));
    return nets;
}

}  // namespace fixture
