#include "citnet/stats.hpp"

#include "citnet/acyclic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace citnet {

std::vector<std::size_t> weak_components(const Network& net, std::size_t* count) {
    const std::size_t n = net.vertex_count();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> comp(n, unset);
    std::vector<VertexId> stack;
    std::size_t next = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (comp[root] != unset) continue;
        comp[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            auto visit = [&](VertexId w) {
                if (comp[w] == unset) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            };
            for (ArcId a : net.out_arcs(v)) visit(net.arc(a).head);
            for (ArcId a : net.in_arcs(v)) visit(net.arc(a).tail);
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

NetworkStats network_stats(const Network& net) {
    NetworkStats st;
    st.n = net.vertex_count();
    st.m = net.arc_count();
    for (const Arc& a : net.arcs()) st.loops += a.is_loop();
    for (VertexId v = 0; v < st.n; ++v) {
        st.isolated += net.in_degree(v) == 0 && net.out_degree(v) == 0;
        st.max_in_degree = std::max(st.max_in_degree, net.in_degree(v));
        st.max_out_degree = std::max(st.max_out_degree, net.out_degree(v));
    }

    std::size_t weak_count = 0;
    const auto weak = weak_components(net, &weak_count);
    std::vector<std::size_t> weak_sizes(weak_count, 0);
    for (auto c : weak) ++weak_sizes[c];
    for (auto size : weak_sizes) {
        st.largest_weak = std::max(st.largest_weak, size);
        st.nontrivial_weak += size >= 2;
    }

    const Partition strong = strong_components(net);
    for (auto size : strong.class_sizes()) {
        if (size >= 2) ++st.scc_size_counts[size];
    }

    // depth on the loop-free condensation
    const Network dag = shrink_components(net, strong);
    const auto order = topological_order(dag);
    std::vector<std::size_t> level(dag.vertex_count(), 1);
    for (VertexId v : order.sequence) {
        for (ArcId a : dag.in_arcs(v)) level[v] = std::max(level[v], level[dag.arc(a).tail] + 1);
        st.depth = std::max(st.depth, level[v]);
    }
    return st;
}

}  // namespace citnet
