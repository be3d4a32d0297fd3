#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace citnet {

// Vertex and arc handles are dense 0-based indices. Pajek files and every
// user-facing report use 1-based ids (vertex + 1).
using VertexId = std::uint32_t;
using ArcId = std::uint32_t;

// u R v means "v cites u": the arc runs from the cited work (tail) to the
// citing work (head).
struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    double weight = 1.0;

    bool is_loop() const noexcept { return tail == head; }
    friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable directed multigraph with vertex labels and forward/backward
// adjacency in CSR form. Arcs keep their input order; adjacency lists are
// ordered by (tail, head, input position).
class Network {
public:
    Network() = default;

    // Throws ArgumentError when an endpoint is out of range or a weight is
    // negative or not finite.
    Network(std::vector<std::string> labels, std::vector<Arc> arcs);

    // origin[v] is the 1-based id of v in the network this one was derived from.
    Network(std::vector<std::string> labels, std::vector<Arc> arcs, std::vector<std::uint64_t> origin);

    // Unlabelled network; vertex v gets label std::to_string(v + 1).
    static Network with_vertex_count(std::size_t n, std::vector<Arc> arcs);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const Arc& arc(ArcId a) const { return arcs_[a]; }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    const std::string& label(VertexId v) const { return labels_[v]; }
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::uint64_t origin(VertexId v) const { return origin_[v]; }
    std::span<const std::uint64_t> origins() const noexcept { return origin_; }

    std::span<const ArcId> out_arcs(VertexId v) const {
        return {out_arcs_.data() + out_offset_[v], out_arcs_.data() + out_offset_[v + 1]};
    }
    std::span<const ArcId> in_arcs(VertexId v) const {
        return {in_arcs_.data() + in_offset_[v], in_arcs_.data() + in_offset_[v + 1]};
    }
    std::size_t out_degree(VertexId v) const { return out_offset_[v + 1] - out_offset_[v]; }
    std::size_t in_degree(VertexId v) const { return in_offset_[v + 1] - in_offset_[v]; }

    // Same vertices, every arc (u,v) replaced by (v,u); arc i stays arc i.
    Network reversed() const;

private:
    void build_adjacency();

    std::vector<std::string> labels_;
    std::vector<std::uint64_t> origin_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> out_offset_{0};
    std::vector<ArcId> out_arcs_;
    std::vector<std::size_t> in_offset_{0};
    std::vector<ArcId> in_arcs_;
};

// Merges parallel arcs, summing their weights. Surviving arcs are ordered by
// (tail, head). Loops are kept.
Network simplify(const Network& net);

// Vertices of a followed by vertices of b; arcs likewise.
Network disjoint_union(const Network& a, const Network& b);

// Drops the listed arcs; vertices are untouched.
Network without_arcs(const Network& net, std::span<const ArcId> arcs);

// Copy of net with arc weights replaced.
Network with_weights(const Network& net, std::span<const double> weights);

}  // namespace citnet
