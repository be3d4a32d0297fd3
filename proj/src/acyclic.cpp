#include "citnet/acyclic.hpp"

#include "citnet/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace citnet {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<std::string> copy_labels(const Network& net) { return {net.labels().begin(), net.labels().end()}; }
std::vector<std::uint64_t> copy_origins(const Network& net) { return {net.origins().begin(), net.origins().end()}; }

}  // namespace

std::vector<std::size_t> Partition::class_sizes() const {
    std::vector<std::size_t> sizes(class_count, 0);
    for (auto c : class_of) ++sizes[c];
    return sizes;
}

Partition strong_components(const Network& net) {
    const std::size_t n = net.vertex_count();
    std::vector<std::size_t> index(n, kUnset);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::size_t> raw_class(n, kUnset);
    std::size_t next_index = 0;
    std::size_t raw_count = 0;

    struct Frame {
        VertexId v;
        std::size_t next_arc;
    };
    std::vector<Frame> call;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& frame = call.back();
            const VertexId v = frame.v;
            const auto out = net.out_arcs(v);
            if (frame.next_arc < out.size()) {
                const VertexId w = net.arc(out[frame.next_arc++]).head;
                if (index[w] == kUnset) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    raw_class[w] = raw_count;
                } while (w != v);
                ++raw_count;
            }
            call.pop_back();
            if (!call.empty()) {
                const VertexId parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    // renumber classes by smallest member
    Partition p;
    p.class_of.assign(n, 0);
    std::vector<std::size_t> renumber(raw_count, kUnset);
    for (VertexId v = 0; v < n; ++v) {
        auto& id = renumber[raw_class[v]];
        if (id == kUnset) id = p.class_count++;
        p.class_of[v] = id;
    }
    return p;
}

Network shrink_components(const Network& net, const Partition& partition) {
    if (partition.class_of.size() != net.vertex_count()) throw ArgumentError("partition does not match network");
    const auto sizes = partition.class_sizes();
    std::vector<std::string> labels(partition.class_count);
    std::vector<std::uint64_t> origin(partition.class_count);
    std::vector<bool> named(partition.class_count, false);
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
        const auto c = partition.class_of[v];
        if (named[c]) continue;
        named[c] = true;
        labels[c] = sizes[c] > 1 ? "#" + net.label(v) : net.label(v);
        origin[c] = net.origin(v);
    }
    std::vector<Arc> arcs;
    arcs.reserve(net.arc_count());
    for (const Arc& a : net.arcs()) {
        const auto tail = static_cast<VertexId>(partition.class_of[a.tail]);
        const auto head = static_cast<VertexId>(partition.class_of[a.head]);
        if (tail != head) arcs.push_back({tail, head, a.weight});
    }
    return simplify(Network(std::move(labels), std::move(arcs), std::move(origin)));
}

Network remove_loops(const Network& net) {
    std::vector<Arc> arcs;
    arcs.reserve(net.arc_count());
    for (const Arc& a : net.arcs()) {
        if (!a.is_loop()) arcs.push_back(a);
    }
    return Network(copy_labels(net), std::move(arcs), copy_origins(net));
}

Network preprint_transform(const Network& net) {
    const Partition p = strong_components(net);
    const auto sizes = p.class_sizes();
    const std::size_t n = net.vertex_count();

    auto labels = copy_labels(net);
    auto origin = copy_origins(net);
    std::vector<VertexId> preprint(n, std::numeric_limits<VertexId>::max());
    std::vector<Arc> extra;
    for (VertexId v = 0; v < n; ++v) {
        if (sizes[p.class_of[v]] < 2) continue;
        preprint[v] = static_cast<VertexId>(labels.size());
        labels.push_back(net.label(v) + "'");
        origin.push_back(net.origin(v));
        extra.push_back({preprint[v], v, 1.0});
    }

    std::vector<Arc> arcs;
    arcs.reserve(net.arc_count() + extra.size());
    for (Arc a : net.arcs()) {
        if (a.is_loop()) continue;
        if (p.class_of[a.tail] == p.class_of[a.head] && sizes[p.class_of[a.tail]] > 1) a.tail = preprint[a.tail];
        arcs.push_back(a);
    }
    arcs.insert(arcs.end(), extra.begin(), extra.end());
    return Network(std::move(labels), std::move(arcs), std::move(origin));
}

TopologicalOrder topological_order(const Network& net, std::optional<ArcId> ignore) {
    const std::size_t n = net.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        if (a != ignore) ++indegree[net.arc(a).head];
    }
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }

    TopologicalOrder order;
    order.sequence.reserve(n);
    order.position.assign(n, kUnset);
    while (!ready.empty()) {
        const VertexId v = ready.top();
        ready.pop();
        order.position[v] = order.sequence.size();
        order.sequence.push_back(v);
        for (ArcId a : net.out_arcs(v)) {
            if (a == ignore) continue;
            const VertexId w = net.arc(a).head;
            if (--indegree[w] == 0) ready.push(w);
        }
    }

    if (order.sequence.size() != n) {
        // every unplaced vertex has an unplaced predecessor; walking back must close a cycle
        VertexId v = 0;
        while (order.position[v] != kUnset) ++v;
        std::vector<bool> seen(n, false);
        while (!seen[v]) {
            seen[v] = true;
            for (ArcId a : net.in_arcs(v)) {
                const VertexId u = net.arc(a).tail;
                if (a != ignore && order.position[u] == kUnset) {
                    v = u;
                    break;
                }
            }
        }
        throw CycleError(v, "network is not acyclic: vertex " + std::to_string(v + 1) + " (" + net.label(v) +
                                ") lies on a cycle");
    }
    return order;
}

bool is_topological(const Network& net, const TopologicalOrder& order, std::optional<ArcId> ignore) {
    if (order.position.size() != net.vertex_count()) return false;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        if (a == ignore) continue;
        const Arc& arc = net.arc(a);
        if (order.position[arc.tail] >= order.position[arc.head]) return false;
    }
    return true;
}

bool is_acyclic(const Network& net) {
    try {
        topological_order(net);
        return true;
    } catch (const CycleError&) {
        return false;
    }
}

StandardizedNetwork standardize(const Network& net) {
    TopologicalOrder inner;
    try {
        inner = topological_order(net);
    } catch (const CycleError& e) {
        throw CycleError(e.vertex(), std::string(e.what()) + "; repair it first (remove loops, then shrink or preprint)");
    }

    const std::size_t n = net.vertex_count();
    const auto s = static_cast<VertexId>(n);
    const auto t = static_cast<VertexId>(n + 1);

    auto labels = copy_labels(net);
    labels.emplace_back("s");
    labels.emplace_back("t");
    auto origin = copy_origins(net);
    origin.push_back(0);
    origin.push_back(0);

    StandardizedNetwork out;
    std::vector<Arc> arcs(net.arcs().begin(), net.arcs().end());
    for (VertexId v = 0; v < n; ++v) {
        if (net.in_degree(v) == 0) {
            out.source_arcs.push_back(static_cast<ArcId>(arcs.size()));
            arcs.push_back({s, v, 1.0});
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (net.out_degree(v) == 0) {
            out.sink_arcs.push_back(static_cast<ArcId>(arcs.size()));
            arcs.push_back({v, t, 1.0});
        }
    }
    out.feedback = static_cast<ArcId>(arcs.size());
    arcs.push_back({t, s, 1.0});

    out.base = Network(std::move(labels), std::move(arcs), std::move(origin));
    out.source = s;
    out.sink = t;
    out.original_vertices = n;
    out.original_arcs = net.arc_count();
    // s is the only vertex without an in-arc and releases exactly the original
    // sources, so the smallest-id order of the extended network is s, the
    // original order, then t.
    out.order.sequence.reserve(n + 2);
    out.order.sequence.push_back(s);
    out.order.sequence.insert(out.order.sequence.end(), inner.sequence.begin(), inner.sequence.end());
    out.order.sequence.push_back(t);
    out.order.position.resize(n + 2);
    for (std::size_t i = 0; i < n + 2; ++i) out.order.position[out.order.sequence[i]] = i;
    return out;
}

DepthMap depths(const StandardizedNetwork& std_net) {
    const Network& g = std_net.base;
    const std::size_t n = g.vertex_count();
    DepthMap d;
    d.from_source.assign(n, 0);
    d.to_sink.assign(n, 0);
    for (VertexId v : std_net.order.sequence) {
        for (ArcId a : g.in_arcs(v)) {
            if (a == std_net.feedback) continue;
            d.from_source[v] = std::max(d.from_source[v], d.from_source[g.arc(a).tail] + 1);
        }
    }
    for (auto it = std_net.order.sequence.rbegin(); it != std_net.order.sequence.rend(); ++it) {
        const VertexId v = *it;
        for (ArcId a : g.out_arcs(v)) {
            if (a == std_net.feedback) continue;
            d.to_sink[v] = std::max(d.to_sink[v], d.to_sink[g.arc(a).head] + 1);
        }
    }
    d.depth = d.from_source[std_net.sink];
    return d;
}

}  // namespace citnet
