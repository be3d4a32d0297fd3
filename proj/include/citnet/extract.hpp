#pragma once

#include "citnet/acyclic.hpp"
#include "citnet/network.hpp"
#include "citnet/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace citnet {

// Relative tolerance that decides ties between floating weights.
inline constexpr double kTieTolerance = 1e-12;

enum class SubnetworkKind { MainPath, CpmPath, ArcCut, Island };

// Vertices and arcs of a parent network, both sorted ascending. Arc indices
// refer to the network the extraction ran on; for main path and CPM that is
// the standardized network, whose original arcs keep their indices.
struct Subnetwork {
    SubnetworkKind kind = SubnetworkKind::MainPath;
    std::vector<VertexId> vertices;
    std::vector<ArcId> arcs;
};

// Greedy main path: starting from s, every frontier vertex follows all of its
// out-arcs of maximal weight (ties within kTieTolerance) until t. With
// `single`, ties are broken by the smallest head id so one path results.
// s, t and auxiliary arcs are stripped from the result.
Subnetwork main_path(const StandardizedNetwork& std_net, const WeightVector& weights, bool single = false);

// All s-t paths of maximal total weight (critical path method). Auxiliary
// arcs count towards the total but are stripped from the result.
Subnetwork cpm_path(const StandardizedNetwork& std_net, const WeightVector& weights);

// Total weight of a path given as arcs of the standardized network, as a double.
double path_weight(const WeightVector& weights, const std::vector<ArcId>& arcs);

struct CutComponent {
    std::vector<VertexId> vertices;
};

struct ArcCut {
    Subnetwork sub;
    // weak components of the cut, largest first (ties by smallest vertex)
    std::vector<CutComponent> components;
};

// Keeps arcs with weight >= threshold, then drops vertices left without arcs.
ArcCut arc_cut(const Network& net, const WeightVector& weights, double threshold);

// The subnetwork as a network of its own: vertices renumbered densely in
// ascending order with labels and origins kept; arc i is sub.arcs[i].
// Weights for it are weights.select(sub.arcs).
Network materialize(const Network& parent, const Subnetwork& sub);

struct Island {
    std::vector<VertexId> vertices;  // ascending
    // Weakest arc of a maximum spanning forest of the island: the island is a
    // connected component of every cut at a threshold in (external, internal].
    // Unset for a single vertex.
    std::optional<ArcId> internal_arc;
    // Strongest arc leaving the island; unset when there is none.
    std::optional<ArcId> external_arc;
    double internal_min = 0.0;  // weight of internal_arc (+inf if unset)
    double external_max = 0.0;  // weight of external_arc (-inf if unset)
};

struct IslandSet {
    std::size_t k = 1;
    std::size_t K = 1;
    std::vector<Island> islands;  // ordered by smallest vertex
};

// Maximal (k, K)-islands by a union-find sweep over the arcs in decreasing
// weight; arcs of equal weight join in the same step. A cluster is kept at
// the last step where its size is <= K, if its size is >= k. Loops are
// ignored. Throws ArgumentError unless 1 <= k <= K.
IslandSet islands(const Network& net, const WeightVector& weights, std::size_t k, std::size_t K);

// Frequency of island sizes 1..K (index 0 unused).
std::vector<std::size_t> island_size_frequencies(const IslandSet& set);

// Vertex -> 1-based island id, 0 for vertices outside every island.
std::vector<std::size_t> island_partition(const IslandSet& set, std::size_t vertex_count);

}  // namespace citnet
