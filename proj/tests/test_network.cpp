#include "doctest.h"

#include "citnet/errors.hpp"
#include "citnet/generators.hpp"
#include "citnet/network.hpp"
#include "citnet/stats.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <tuple>

using namespace citnet;

TEST_CASE("network keeps arcs in input order with sorted adjacency") {
    const Network g = Network::with_vertex_count(3, {{2, 0}, {0, 2}, {0, 1}, {0, 1, 2.5}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.arc_count() == 4);
    CHECK(g.arc(0) == Arc{2, 0, 1.0});
    const auto out = g.out_arcs(0);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == 2);
    CHECK(out[1] == 3);
    CHECK(out[2] == 1);
    CHECK(g.in_degree(0) == 1);
    CHECK(g.label(2) == "3");
    CHECK(g.origin(2) == 3);
}

TEST_CASE("adjacency matches a plain sort for grouped and shuffled inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        std::vector<Arc> arcs;
        for (std::size_t i = rng() % 30; i > 0; --i) {
            arcs.push_back({static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n)});
        }
        // even trials are listed by (tail, head), which takes the one-pass route
        if (trial % 2 == 0) {
            std::stable_sort(arcs.begin(), arcs.end(),
                             [](const Arc& x, const Arc& y) { return std::tie(x.tail, x.head) < std::tie(y.tail, y.head); });
        }
        const Network g = Network::with_vertex_count(n, arcs);
        std::vector<ArcId> by_out(arcs.size());
        std::iota(by_out.begin(), by_out.end(), ArcId{0});
        std::vector<ArcId> by_in = by_out;
        std::sort(by_out.begin(), by_out.end(), [&](ArcId x, ArcId y) {
            return std::tie(arcs[x].tail, arcs[x].head, x) < std::tie(arcs[y].tail, arcs[y].head, y);
        });
        std::sort(by_in.begin(), by_in.end(), [&](ArcId x, ArcId y) {
            return std::tie(arcs[x].head, arcs[x].tail, x) < std::tie(arcs[y].head, arcs[y].tail, y);
        });
        std::vector<ArcId> out_lists;
        std::vector<ArcId> in_lists;
        for (VertexId v = 0; v < n; ++v) {
            for (ArcId a : g.out_arcs(v)) out_lists.push_back(a);
            for (ArcId a : g.in_arcs(v)) in_lists.push_back(a);
        }
        CHECK(out_lists == by_out);
        CHECK(in_lists == by_in);
    }
}

TEST_CASE("network rejects bad endpoints and weights") {
    CHECK_THROWS_AS(Network::with_vertex_count(2, {{0, 2}}), ArgumentError);
    CHECK_THROWS_AS(Network::with_vertex_count(2, {{0, 1, -1.0}}), ArgumentError);
    CHECK_THROWS_AS(Network::with_vertex_count(2, {{0, 1, std::numeric_limits<double>::infinity()}}), ArgumentError);
}

TEST_CASE("reversed swaps arc directions and keeps indices") {
    const Network g = fixture::diamond();
    const Network r = g.reversed();
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        CHECK(r.arc(a).tail == g.arc(a).head);
        CHECK(r.arc(a).head == g.arc(a).tail);
    }
    CHECK(r.label(0) == "a");
}

TEST_CASE("simplify merges parallel arcs by summing weights") {
    const Network g = Network::with_vertex_count(3, {{1, 2, 1.0}, {0, 1, 2.0}, {1, 2, 3.0}, {1, 1, 1.0}});
    const Network s = simplify(g);
    REQUIRE(s.arc_count() == 3);
    CHECK(s.arc(0) == Arc{0, 1, 2.0});
    CHECK(s.arc(1) == Arc{1, 1, 1.0});
    CHECK(s.arc(2) == Arc{1, 2, 4.0});
}

TEST_CASE("disjoint union and arc deletion") {
    const Network u = disjoint_union(fixture::diamond(), fixture::path3());
    CHECK(u.vertex_count() == 7);
    CHECK(u.arc_count() == 6);
    CHECK(u.arc(5) == Arc{5, 6, 1.0});
    CHECK(u.label(4) == "a");

    const std::vector<ArcId> drop{0, 3};
    const Network d = without_arcs(fixture::diamond(), drop);
    CHECK(d.vertex_count() == 4);
    REQUIRE(d.arc_count() == 2);
    CHECK(d.arc(0) == Arc{0, 2, 1.0});
    CHECK(d.arc(1) == Arc{1, 3, 1.0});
}

TEST_CASE("complete acyclic networks") {
    const Network dk3 = complete_acyclic(3);
    REQUIRE(dk3.arc_count() == 3);
    CHECK(dk3.arc(0) == Arc{0, 1, 1.0});
    CHECK(dk3.arc(1) == Arc{0, 2, 1.0});
    CHECK(dk3.arc(2) == Arc{1, 2, 1.0});
    CHECK(complete_acyclic(4).arc_count() == 6);
    CHECK(complete_acyclic(10).arc_count() == 45);
    CHECK_THROWS_AS(complete_acyclic(1), ArgumentError);
}

TEST_CASE("random DAGs are reproducible and respect the density bounds") {
    const Network full = random_dag(5, 1.0, 12345);
    const Network dk5 = complete_acyclic(5);
    CHECK(std::equal(full.arcs().begin(), full.arcs().end(), dk5.arcs().begin(), dk5.arcs().end()));

    const Network a = random_dag(100, 0.05, 7);
    const Network b = random_dag(100, 0.05, 7);
    CHECK(std::equal(a.arcs().begin(), a.arcs().end(), b.arcs().begin(), b.arcs().end()));
    CHECK(a.arc_count() > 150);
    CHECK(a.arc_count() < 350);
    for (const auto& e : a.arcs()) CHECK(e.tail < e.head);

    const Network c = random_dag(100, 0.05, 8);
    CHECK_FALSE(std::equal(a.arcs().begin(), a.arcs().end(), c.arcs().begin(), c.arcs().end()));

    CHECK_THROWS_AS(random_dag(1, 0.5, 1), ArgumentError);
    CHECK_THROWS_AS(random_dag(5, 0.0, 1), ArgumentError);
    CHECK_THROWS_AS(random_dag(5, 1.5, 1), ArgumentError);
}

TEST_CASE("random DAG arcs are sorted lexicographically and unique") {
    const Network g = random_dag(60, 0.2, 99);
    for (ArcId a = 1; a < g.arc_count(); ++a) {
        const auto& p = g.arc(a - 1);
        const auto& q = g.arc(a);
        CHECK((p.tail < q.tail || (p.tail == q.tail && p.head < q.head)));
    }
}

TEST_CASE("stats of the diamond") {
    const NetworkStats st = network_stats(fixture::diamond());
    CHECK(st.n == 4);
    CHECK(st.m == 4);
    CHECK(st.loops == 0);
    CHECK(st.isolated == 0);
    CHECK(st.largest_weak == 4);
    CHECK(st.nontrivial_weak == 1);
    CHECK(st.depth == 3);
    CHECK(st.max_in_degree == 2);
    CHECK(st.max_out_degree == 2);
    CHECK(st.scc_size_counts.empty());
}

TEST_CASE("stats count loops, isolated vertices and strong components") {
    CHECK(network_stats(Network::with_vertex_count(1, {{0, 0}})).loops == 1);
    const NetworkStats cyc = network_stats(fixture::two_cycle());
    CHECK(cyc.scc_size_counts == std::map<std::size_t, std::size_t>{{2, 1}});
    CHECK(cyc.depth == 1);

    // two arcs, one isolated vertex, a 3-cycle feeding a path
    const Network g = Network::with_vertex_count(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {5, 6}, {5, 5}});
    const NetworkStats st = network_stats(g);
    CHECK(st.loops == 1);
    CHECK(st.isolated == 1);
    CHECK(st.largest_weak == 5);
    CHECK(st.nontrivial_weak == 2);
    CHECK(st.depth == 3);
    CHECK(st.scc_size_counts == std::map<std::size_t, std::size_t>{{3, 1}});
}

TEST_CASE("weak components are numbered by smallest member") {
    std::size_t count = 0;
    const auto comp = weak_components(Network::with_vertex_count(5, {{3, 4}, {1, 0}}), &count);
    CHECK(count == 3);
    CHECK(comp == std::vector<std::size_t>{0, 0, 1, 2, 2});
}
