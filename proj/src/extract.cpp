#include "citnet/extract.hpp"

#include "arith.hpp"
#include "citnet/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace citnet {

using detail::Arith;
using detail::dispatch;
using detail::load;

namespace {

void check_aligned(const Network& net, const WeightVector& w) {
    if (w.size() != net.arc_count()) throw ArgumentError("weights are not aligned with the network arcs");
}

// Keeps original arcs only; vertices are their endpoints.
Subnetwork strip(const StandardizedNetwork& std_net, const std::vector<ArcId>& arcs, SubnetworkKind kind) {
    Subnetwork sub;
    sub.kind = kind;
    for (ArcId a : arcs) {
        if (!std_net.is_original_arc(a)) continue;
        sub.arcs.push_back(a);
        sub.vertices.push_back(std_net.base.arc(a).tail);
        sub.vertices.push_back(std_net.base.arc(a).head);
    }
    std::sort(sub.arcs.begin(), sub.arcs.end());
    std::sort(sub.vertices.begin(), sub.vertices.end());
    sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()), sub.vertices.end());
    return sub;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // Returns the new root, or nullopt if already joined. Ties keep the smaller root.
    std::optional<std::size_t> unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return std::nullopt;
        if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    std::size_t size(std::size_t root) const { return size_[root]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace

Subnetwork main_path(const StandardizedNetwork& std_net, const WeightVector& weights, bool single) {
    const Network& g = std_net.base;
    check_aligned(g, weights);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> frontier{std_net.source};
    seen[std_net.source] = true;
    std::vector<ArcId> chosen;

    while (!frontier.empty()) {
        std::vector<VertexId> next;
        for (VertexId v : frontier) {
            std::optional<ArcId> best;
            for (ArcId a : g.out_arcs(v)) {
                if (a == std_net.feedback) continue;
                if (!best || weights.compare(a, *best) > 0) best = a;
            }
            if (!best) continue;
            for (ArcId a : g.out_arcs(v)) {
                if (a == std_net.feedback || !weights.nearly_equal(a, *best, kTieTolerance)) continue;
                chosen.push_back(a);
                const VertexId w = g.arc(a).head;
                if (!seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                }
                if (single) break;  // out-arcs are ordered by head id
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return strip(std_net, chosen, SubnetworkKind::MainPath);
}

Subnetwork cpm_path(const StandardizedNetwork& std_net, const WeightVector& weights) {
    const Network& g = std_net.base;
    check_aligned(g, weights);
    const std::vector<ArcId> chosen = dispatch(weights.mode(), [&]<class T>() {
        using A = Arith<T>;
        const std::size_t n = g.vertex_count();
        const auto& seq = std_net.order.sequence;
        std::vector<std::optional<T>> to(n);    // best s-v total
        std::vector<std::optional<T>> from(n);  // best v-t total
        to[std_net.source] = A::zero();
        for (VertexId v : seq) {
            for (ArcId a : g.in_arcs(v)) {
                if (a == std_net.feedback) continue;
                const auto& prev = to[g.arc(a).tail];
                if (!prev) continue;
                T cand = A::add(*prev, load<T>(weights, a));
                if (!to[v] || A::less(*to[v], cand)) to[v] = std::move(cand);
            }
        }
        from[std_net.sink] = A::zero();
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            const VertexId v = *it;
            for (ArcId a : g.out_arcs(v)) {
                if (a == std_net.feedback) continue;
                const auto& next = from[g.arc(a).head];
                if (!next) continue;
                T cand = A::add(load<T>(weights, a), *next);
                if (!from[v] || A::less(*from[v], cand)) from[v] = std::move(cand);
            }
        }
        std::vector<ArcId> arcs;
        const auto& best = to[std_net.sink];
        if (!best) return arcs;
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            if (a == std_net.feedback) continue;
            const Arc& e = g.arc(a);
            if (!to[e.tail] || !from[e.head]) continue;
            const T through = A::add(A::add(*to[e.tail], load<T>(weights, a)), *from[e.head]);
            if (A::near(through, *best, kTieTolerance)) arcs.push_back(a);
        }
        return arcs;
    });
    return strip(std_net, chosen, SubnetworkKind::CpmPath);
}

double path_weight(const WeightVector& weights, const std::vector<ArcId>& arcs) {
    double total = 0.0;
    for (ArcId a : arcs) total += weights.to_double(a);
    return total;
}

ArcCut arc_cut(const Network& net, const WeightVector& weights, double threshold) {
    check_aligned(net, weights);
    ArcCut cut;
    cut.sub.kind = SubnetworkKind::ArcCut;
    UnionFind uf(net.vertex_count());
    std::vector<bool> used(net.vertex_count(), false);
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        if (weights.compare_to(a, threshold) < 0) continue;
        const Arc& e = net.arc(a);
        cut.sub.arcs.push_back(a);
        used[e.tail] = used[e.head] = true;
        uf.unite(e.tail, e.head);
    }
    std::vector<std::size_t> slot(net.vertex_count(), std::numeric_limits<std::size_t>::max());
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
        if (!used[v]) continue;
        cut.sub.vertices.push_back(v);
        const auto root = uf.find(v);
        if (slot[root] == std::numeric_limits<std::size_t>::max()) {
            slot[root] = cut.components.size();
            cut.components.emplace_back();
        }
        cut.components[slot[root]].vertices.push_back(v);
    }
    std::stable_sort(cut.components.begin(), cut.components.end(),
                     [](const CutComponent& a, const CutComponent& b) { return a.vertices.size() > b.vertices.size(); });
    return cut;
}

Network materialize(const Network& parent, const Subnetwork& sub) {
    std::vector<VertexId> dense(parent.vertex_count(), std::numeric_limits<VertexId>::max());
    std::vector<std::string> labels;
    std::vector<std::uint64_t> origin;
    for (VertexId v : sub.vertices) {
        dense[v] = static_cast<VertexId>(labels.size());
        labels.push_back(parent.label(v));
        origin.push_back(parent.origin(v));
    }
    std::vector<Arc> arcs;
    arcs.reserve(sub.arcs.size());
    for (ArcId a : sub.arcs) {
        Arc e = parent.arc(a);
        e.tail = dense[e.tail];
        e.head = dense[e.head];
        arcs.push_back(e);
    }
    return Network(std::move(labels), std::move(arcs), std::move(origin));
}

IslandSet islands(const Network& net, const WeightVector& weights, std::size_t k, std::size_t K) {
    check_aligned(net, weights);
    if (k < 1 || K < k) throw ArgumentError("islands need 1 <= k <= K");
    const std::size_t n = net.vertex_count();

    std::vector<ArcId> order;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        if (!net.arc(a).is_loop()) order.push_back(a);
    }
    std::stable_sort(order.begin(), order.end(), [&](ArcId a, ArcId b) { return weights.compare(a, b) > 0; });

    UnionFind uf(n);
    // members are tracked only while a cluster is small enough to become an island
    std::vector<std::vector<VertexId>> members(n);
    for (VertexId v = 0; v < n; ++v) members[v] = {v};
    std::vector<std::optional<ArcId>> level(n);  // weakest spanning arc per root

    IslandSet out;
    out.k = k;
    out.K = K;
    auto emit = [&](std::size_t root, std::optional<ArcId> external) {
        auto& vs = members[root];
        if (vs.size() < k || vs.size() > K) return;
        Island island;
        island.vertices = vs;
        std::sort(island.vertices.begin(), island.vertices.end());
        island.internal_arc = level[root];
        island.external_arc = external;
        island.internal_min = level[root] ? weights.to_double(*level[root]) : std::numeric_limits<double>::infinity();
        island.external_max = external ? weights.to_double(*external) : -std::numeric_limits<double>::infinity();
        out.islands.push_back(std::move(island));
    };

    std::vector<std::size_t> pre_roots;
    std::vector<std::size_t> pre_size(n, 0);
    std::vector<std::optional<ArcId>> leaving(n);
    std::size_t begin = 0;
    while (begin < order.size()) {
        std::size_t end = begin + 1;
        while (end < order.size() && weights.compare(order[end], order[begin]) == 0) ++end;

        pre_roots.clear();
        for (std::size_t i = begin; i < end; ++i) {
            const Arc& e = net.arc(order[i]);
            const auto ru = uf.find(e.tail);
            const auto rv = uf.find(e.head);
            if (ru == rv) continue;
            for (auto r : {ru, rv}) {
                if (!leaving[r]) {
                    leaving[r] = order[i];
                    pre_size[r] = uf.size(r);
                    pre_roots.push_back(r);
                }
            }
        }
        std::vector<std::pair<std::size_t, ArcId>> merged_by;
        for (std::size_t i = begin; i < end; ++i) {
            const Arc& e = net.arc(order[i]);
            if (auto root = uf.unite(e.tail, e.head)) merged_by.emplace_back(*root, order[i]);
        }

        // clusters that outgrow K are frozen as they were before this step
        for (auto r : pre_roots) {
            const auto root = uf.find(r);
            if (uf.size(root) > K && pre_size[r] <= K) emit(r, leaving[r]);
        }
        for (auto r : pre_roots) {
            const auto root = uf.find(r);
            if (r != root || uf.size(root) > K) {
                if (r != root && uf.size(root) <= K) {
                    members[root].insert(members[root].end(), members[r].begin(), members[r].end());
                }
                members[r].clear();
                members[r].shrink_to_fit();
            }
        }
        for (const auto& [root, arc] : merged_by) {
            const auto r = uf.find(root);
            level[r] = arc;
        }
        for (auto r : pre_roots) leaving[r].reset();
        begin = end;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (uf.find(v) == v && uf.size(v) <= K) emit(v, std::nullopt);
    }
    std::sort(out.islands.begin(), out.islands.end(),
              [](const Island& a, const Island& b) { return a.vertices.front() < b.vertices.front(); });
    return out;
}

std::vector<std::size_t> island_size_frequencies(const IslandSet& set) {
    std::vector<std::size_t> freq(set.K + 1, 0);
    for (const auto& island : set.islands) ++freq[island.vertices.size()];
    return freq;
}

std::vector<std::size_t> island_partition(const IslandSet& set, std::size_t vertex_count) {
    std::vector<std::size_t> cls(vertex_count, 0);
    for (std::size_t i = 0; i < set.islands.size(); ++i) {
        for (VertexId v : set.islands[i].vertices) cls[v] = i + 1;
    }
    return cls;
}

}  // namespace citnet
