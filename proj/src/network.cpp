#include "citnet/network.hpp"

#include "citnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace citnet {

namespace {

std::vector<std::uint64_t> identity_origin(std::size_t n) {
    std::vector<std::uint64_t> origin(n);
    std::iota(origin.begin(), origin.end(), std::uint64_t{1});
    return origin;
}

std::vector<std::size_t> bucket_offsets(const std::vector<VertexId>& keys, std::size_t n) {
    std::vector<std::size_t> offset(n + 1, 0);
    for (VertexId k : keys) ++offset[k + 1];
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    return offset;
}

}  // namespace

Network::Network(std::vector<std::string> labels, std::vector<Arc> arcs)
    : Network(std::move(labels), std::move(arcs), {}) {}

Network::Network(std::vector<std::string> labels, std::vector<Arc> arcs, std::vector<std::uint64_t> origin)
    : labels_(std::move(labels)), origin_(std::move(origin)), arcs_(std::move(arcs)) {
    if (origin_.empty()) origin_ = identity_origin(labels_.size());
    if (origin_.size() != labels_.size()) throw ArgumentError("origin map does not match vertex count");
    if (arcs_.size() >= std::numeric_limits<ArcId>::max()) throw ArgumentError("too many arcs");
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.tail >= n || a.head >= n) {
            throw ArgumentError("arc " + std::to_string(i + 1) + " has an endpoint outside 1.." + std::to_string(n));
        }
        if (!std::isfinite(a.weight) || a.weight < 0.0) {
            throw ArgumentError("arc " + std::to_string(i + 1) + " has a negative or non-finite weight");
        }
    }
    build_adjacency();
}

Network Network::with_vertex_count(std::size_t n, std::vector<Arc> arcs) {
    std::vector<std::string> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);
    return Network(std::move(labels), std::move(arcs));
}

// Stable counting passes. Each pass carries the next sort key along with
// the arc id so every read is sequential, which matters once the arc array
// no longer fits in cache.
void Network::build_adjacency() {
    const std::size_t n = labels_.size();
    const std::size_t m = arcs_.size();
    std::vector<VertexId> key(m);
    std::vector<ArcId> ids(m);

    // When heads never decrease along each tail's arcs, one stable pass by
    // tail already gives (tail, head, position) order.
    bool grouped = true;
    {
        std::vector<VertexId> last_head(n, 0);
        for (const Arc& a : arcs_) {
            if (a.head < last_head[a.tail]) {
                grouped = false;
                break;
            }
            last_head[a.tail] = a.head;
        }
    }

    if (grouped) {
        std::vector<VertexId> tails(m);
        for (std::size_t i = 0; i < m; ++i) tails[i] = arcs_[i].tail;
        out_offset_ = bucket_offsets(tails, n);
        std::vector<std::size_t> cursor(out_offset_.begin(), out_offset_.end() - 1);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t slot = cursor[arcs_[i].tail]++;
            ids[slot] = static_cast<ArcId>(i);
            key[slot] = arcs_[i].head;
        }
    } else {
        // by head first, keeping each arc's tail alongside
        for (std::size_t i = 0; i < m; ++i) key[i] = arcs_[i].head;
        const std::vector<std::size_t> by_head = bucket_offsets(key, n);
        std::vector<ArcId> first(m);
        std::vector<VertexId> tails(m);
        std::vector<std::size_t> cursor(by_head.begin(), by_head.end() - 1);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t slot = cursor[key[i]]++;
            first[slot] = static_cast<ArcId>(i);
            tails[slot] = arcs_[i].tail;
        }
        // then stably by tail; the head is implied by the bucket being read
        out_offset_ = bucket_offsets(tails, n);
        cursor.assign(out_offset_.begin(), out_offset_.end() - 1);
        VertexId head = 0;
        for (std::size_t i = 0; i < m; ++i) {
            while (i >= by_head[head + 1]) ++head;
            const std::size_t slot = cursor[tails[i]]++;
            ids[slot] = first[i];
            key[slot] = head;
        }
    }
    out_arcs_ = std::move(ids);

    // by head, stable over the out order
    in_offset_ = bucket_offsets(key, n);
    in_arcs_.assign(m, 0);
    std::vector<std::size_t> cursor(in_offset_.begin(), in_offset_.end() - 1);
    for (std::size_t i = 0; i < m; ++i) in_arcs_[cursor[key[i]]++] = out_arcs_[i];
}

Network Network::reversed() const {
    std::vector<Arc> arcs(arcs_);
    for (Arc& a : arcs) std::swap(a.tail, a.head);
    return Network(labels_, std::move(arcs), origin_);
}

Network simplify(const Network& net) {
    std::vector<Arc> merged;
    merged.reserve(net.arc_count());
    for (VertexId u = 0; u < net.vertex_count(); ++u) {
        for (ArcId a : net.out_arcs(u)) {
            const Arc& arc = net.arc(a);
            if (!merged.empty() && merged.back().tail == arc.tail && merged.back().head == arc.head) {
                merged.back().weight += arc.weight;
            } else {
                merged.push_back(arc);
            }
        }
    }
    return Network({net.labels().begin(), net.labels().end()}, std::move(merged),
                   {net.origins().begin(), net.origins().end()});
}

Network disjoint_union(const Network& a, const Network& b) {
    std::vector<std::string> labels(a.labels().begin(), a.labels().end());
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<std::uint64_t> origin(a.origins().begin(), a.origins().end());
    origin.insert(origin.end(), b.origins().begin(), b.origins().end());
    std::vector<Arc> arcs(a.arcs().begin(), a.arcs().end());
    const auto shift = static_cast<VertexId>(a.vertex_count());
    for (Arc arc : b.arcs()) {
        arc.tail += shift;
        arc.head += shift;
        arcs.push_back(arc);
    }
    return Network(std::move(labels), std::move(arcs), std::move(origin));
}

Network without_arcs(const Network& net, std::span<const ArcId> arcs) {
    std::unordered_set<ArcId> drop(arcs.begin(), arcs.end());
    std::vector<Arc> kept;
    kept.reserve(net.arc_count());
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        if (!drop.contains(a)) kept.push_back(net.arc(a));
    }
    return Network({net.labels().begin(), net.labels().end()}, std::move(kept),
                   {net.origins().begin(), net.origins().end()});
}

Network with_weights(const Network& net, std::span<const double> weights) {
    if (weights.size() != net.arc_count()) throw ArgumentError("weight vector does not match arc count");
    std::vector<Arc> arcs(net.arcs().begin(), net.arcs().end());
    for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].weight = weights[i];
    return Network({net.labels().begin(), net.labels().end()}, std::move(arcs),
                   {net.origins().begin(), net.origins().end()});
}

}  // namespace citnet
