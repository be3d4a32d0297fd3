#pragma once

#include "citnet/network.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace citnet {

// Vertex partition; classes are numbered 0..class_count-1 in order of their
// smallest member.
struct Partition {
    std::vector<std::size_t> class_of;
    std::size_t class_count = 0;

    std::vector<std::size_t> class_sizes() const;
};

// Strong components (iterative Tarjan, O(n + m)).
Partition strong_components(const Network& net);

// One vertex per class. Intra-class arcs (and so all loops) are dropped and
// parallel arcs merged with summed weights. A vertex standing for a
// nontrivial class is labelled "#" + label of its smallest member.
Network shrink_components(const Network& net, const Partition& partition);

Network remove_loops(const Network& net);

// Duplicates every member u of a nontrivial strong component by a preprint
// u' (appended after the original vertices, labelled label(u) + "'"), adds
// u' -> u and redirects each intra-component arc (u, v) to (u', v). Loops
// are dropped. The result is acyclic.
Network preprint_transform(const Network& net);

struct TopologicalOrder {
    std::vector<VertexId> sequence;  // vertices in order
    std::vector<std::size_t> position;  // position[v] = index of v in sequence
};

// Kahn's algorithm, smallest available id first. `ignore` names one arc to
// leave out (the feedback arc of a standardized network). Throws CycleError
// carrying a vertex that lies on a cycle.
TopologicalOrder topological_order(const Network& net, std::optional<ArcId> ignore = std::nullopt);

// Single pass certificate check.
bool is_topological(const Network& net, const TopologicalOrder& order, std::optional<ArcId> ignore = std::nullopt);

bool is_acyclic(const Network& net);

// The network extended by a source s, a sink t and the feedback arc (t, s).
// Original vertices keep their ids and s, t are appended. Original arcs keep
// their indices 0..m-1, followed by s -> Min R (ascending), Max R -> t
// (ascending) and finally the feedback arc.
struct StandardizedNetwork {
    Network base;
    VertexId source = 0;
    VertexId sink = 0;
    ArcId feedback = 0;
    std::size_t original_vertices = 0;
    std::size_t original_arcs = 0;
    std::vector<ArcId> source_arcs;
    std::vector<ArcId> sink_arcs;
    TopologicalOrder order;  // of base without the feedback arc

    bool is_original_arc(ArcId a) const { return a < original_arcs; }
    bool is_original_vertex(VertexId v) const { return v < original_vertices; }
};

// Throws CycleError when net has a cycle or a loop.
StandardizedNetwork standardize(const Network& net);

// Longest-path depths ignoring the feedback arc: from_source[s] = 0,
// to_sink[t] = 0, depth = from_source[t].
struct DepthMap {
    std::vector<std::size_t> from_source;
    std::vector<std::size_t> to_sink;
    std::size_t depth = 0;
};

DepthMap depths(const StandardizedNetwork& std_net);

}  // namespace citnet
