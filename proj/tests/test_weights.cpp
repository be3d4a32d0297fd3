#include "doctest.h"

#include "citnet/errors.hpp"
#include "citnet/generators.hpp"
#include "citnet/stats.hpp"
#include "citnet/weights.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <random>

using namespace citnet;
using boost::multiprecision::cpp_rational;

namespace {

constexpr NumericMode kExact = NumericMode::ExactInteger;

std::uint64_t u64(const WeightVector& w, std::size_t i) { return oracle::as_u64(w, i); }

std::vector<Network> test_networks() { return fixture::suite(); }

}  // namespace

TEST_CASE("spc on the diamond") {
    const StandardizedNetwork s = standardize(fixture::diamond());
    const WeightResult w = spc(s, kExact);
    CHECK(u64(w.arc, 4) == 2);  // (s,a)
    for (ArcId a = 0; a < 4; ++a) CHECK(u64(w.arc, a) == 1);
    CHECK(u64(w.arc, 5) == 2);  // (d,t)
    CHECK(u64(w.arc, s.feedback) == 2);
    CHECK(w.total_flow->str() == "2");
    CHECK(u64(w.vertex, s.source) == 2);
    CHECK(u64(w.vertex, s.sink) == 2);
    CHECK(u64(w.vertex, 1) == 1);

    const WeightResult f = spc(s);
    CHECK(f.mode() == NumericMode::Float);
    CHECK(f.arc.to_double(4) == 2.0);
}

TEST_CASE("spc on a path") {
    const WeightResult w = spc(standardize(fixture::path3()), kExact);
    for (std::size_t a = 0; a < w.arc.size(); ++a) CHECK(u64(w.arc, a) == 1);
    CHECK(w.total_flow->str() == "1");
}

TEST_CASE("splc examples") {
    const WeightResult d = splc(standardize(fixture::diamond()), kExact);
    CHECK(u64(d.arc, 0) == 1);  // (a,b)
    CHECK(u64(d.arc, 1) == 1);  // (a,c)
    CHECK(u64(d.arc, 2) == 2);  // (b,d)
    CHECK(u64(d.arc, 3) == 2);  // (c,d)
    CHECK(u64(d.vertex, 3) == 5);

    const WeightResult p = splc(standardize(fixture::path3()), kExact);
    CHECK(u64(p.arc, 0) == 1);
    CHECK(u64(p.arc, 1) == 2);
}

TEST_CASE("spnp examples") {
    const WeightResult d = spnp(standardize(fixture::diamond()), kExact);
    for (ArcId a = 0; a < 4; ++a) CHECK(u64(d.arc, a) == 2);
    const WeightResult p = spnp(standardize(fixture::path3()), kExact);
    CHECK(u64(p.arc, 0) == 2);
    CHECK(u64(p.arc, 1) == 2);
    CHECK(u64(spnp(standardize(fixture::single_arc()), kExact).arc, 0) == 1);
}

TEST_CASE("nppc and sum examples") {
    const WeightResult d = nppc(fixture::diamond(), kExact);
    CHECK(u64(d.arc, 0) == 2);  // (a,b): 1 * 2
    CHECK(u64(d.arc, 2) == 2);  // (b,d): 2 * 1
    CHECK(u64(d.vertex, 1) == 4);
    CHECK(u64(nppc(fixture::single_arc(), kExact).arc, 0) == 1);

    const WeightResult s = sum_weights(fixture::diamond(), kExact);
    CHECK(u64(s.arc, 0) == 3);
    CHECK(s.arc_scaled.to_double(0) == 0.75);
    CHECK(u64(sum_weights(fixture::single_arc(), kExact).arc, 0) == 2);

    CHECK_THROWS_AS(nppc(fixture::two_cycle()), CycleError);
    CHECK_THROWS_AS(sum_weights(fixture::two_cycle()), CycleError);
}

TEST_CASE("path polynomials") {
    const StandardizedNetwork d = standardize(fixture::diamond());
    const PathPolynomials p = path_polynomials(d);
    REQUIRE(p.minus.size() == d.base.vertex_count());
    const WeightVector& pd = p.minus[3];
    REQUIRE(pd.size() >= 3);
    CHECK(u64(pd, 0) == 1);
    CHECK(u64(pd, 1) == 2);
    CHECK(u64(pd, 2) == 2);
    for (std::size_t k = 3; k < pd.size(); ++k) CHECK(u64(pd, k) == 0);
    CHECK(u64(evaluate(p).minus, 3) == 5);
    CHECK(u64(evaluate(p).plus, 0) == 5);

    const PathPolynomials q = path_polynomials(standardize(fixture::path3()));
    CHECK(u64(q.minus[2], 0) == 1);
    CHECK(u64(q.minus[2], 1) == 1);
    CHECK(u64(q.minus[2], 2) == 1);

    for (VertexId v = 0; v < 4; ++v) CHECK(u64(p.minus[v], 0) == 1);
}

TEST_CASE("polynomial degrees are bounded by depth") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const StandardizedNetwork s = standardize(random_dag(12, 0.3, seed));
        const PathPolynomials p = path_polynomials(s);
        const DepthMap h = depths(s);
        for (VertexId v = 0; v < s.original_vertices; ++v) {
            for (std::size_t k = h.from_source[v]; k < p.minus[v].size(); ++k) CHECK(u64(p.minus[v], k) == 0);
            for (std::size_t k = h.to_sink[v]; k < p.plus[v].size(); ++k) CHECK(u64(p.plus[v], k) == 0);
        }
    }
}

TEST_CASE("aged path counts") {
    const StandardizedNetwork d = standardize(fixture::diamond());
    const WeightResult one = aged_path_counts(d, 1.0, kExact);
    const WeightResult sp = spnp(d, kExact);
    for (std::size_t a = 0; a < sp.arc.size(); ++a) CHECK(one.arc.exact()[a] == sp.arc.exact()[a]);
    for (std::size_t v = 0; v < sp.vertex.size(); ++v) CHECK(one.vertex.exact()[v] == sp.vertex.exact()[v]);

    const WeightResult half = aged_path_counts(standardize(fixture::path3()), 0.5);
    // L-(a) = 1, L-(b) = 1.5, L-(c) = 1.75; L+(b) = 1.5, L+(c) = 1
    CHECK(half.vertex.to_double(2) == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(half.arc.to_double(1) == doctest::Approx(1.5 * 1.0).epsilon(1e-15));
    CHECK(half.arc.to_double(0) == doctest::Approx(1.0 * 1.5).epsilon(1e-15));

    const StandardizedNetwork r = standardize(random_dag(10, 0.5, 3));
    const WeightResult tiny = aged_path_counts(r, 1e-12);
    for (ArcId a = 0; a < r.original_arcs; ++a) CHECK(tiny.arc.to_double(a) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(aged_path_counts(d, 0.0), ArgumentError);
    CHECK_THROWS_AS(aged_path_counts(d, 1.5), ArgumentError);
    CHECK_THROWS_AS(aged_path_counts(d, 0.5, kExact), ArgumentError);
}

TEST_CASE("aged counts agree with the polynomials evaluated at alpha") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const StandardizedNetwork s = standardize(random_dag(10, 0.4, seed));
        const PathTotals at = evaluate(path_polynomials(s, NumericMode::Float), 0.3);
        const WeightResult aged = aged_path_counts(s, 0.3);
        for (ArcId a = 0; a < s.original_arcs; ++a) {
            const Arc& e = s.base.arc(a);
            CHECK(aged.arc.to_double(a) == doctest::Approx(at.minus.to_double(e.tail) * at.plus.to_double(e.head)).epsilon(1e-12));
        }
    }
}

TEST_CASE("oracle equivalence on random DAGs") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Network g = random_dag(2 + seed % 9, 0.3, seed);
        const StandardizedNetwork s = standardize(g);

        const auto c = oracle::spc_by_enumeration(s);
        const WeightResult wc = spc(s, kExact);
        for (std::size_t a = 0; a < c.size(); ++a) CHECK(u64(wc.arc, a) == c[a]);

        const auto l = oracle::splc_by_enumeration(g);
        const WeightResult wl = splc(s, kExact);
        for (ArcId a = 0; a < g.arc_count(); ++a) CHECK(u64(wl.arc, a) == l[a]);

        const auto p = oracle::spnp_by_enumeration(g);
        const auto ends = oracle::path_ends_by_enumeration(g);
        const WeightResult wp = spnp(s, kExact);
        const PathTotals lt = evaluate(path_polynomials(s));
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            CHECK(u64(wp.arc, a) == p[a]);
            CHECK(p[a] == ends.minus[g.arc(a).tail] * ends.plus[g.arc(a).head]);
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            CHECK(u64(lt.minus, v) == ends.minus[v]);
            CHECK(u64(lt.plus, v) == ends.plus[v]);
        }

        const auto cl = oracle::closure_sizes(g);
        const WeightResult wd = nppc(g, kExact);
        const WeightResult ws = sum_weights(g, kExact);
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            const Arc& e = g.arc(a);
            CHECK(u64(wd.arc, a) == cl.ancestors[e.tail] * cl.descendants[e.head]);
            CHECK(u64(ws.arc, a) == cl.ancestors[e.tail] + cl.descendants[e.head]);
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(u64(wd.vertex, v) == cl.ancestors[v] * cl.descendants[v]);
    }
}

TEST_CASE("complete acyclic networks") {
    for (std::size_t n = 3; n <= 12; ++n) {
        const Network dk = complete_acyclic(n);
        const WeightResult w = spc(standardize(dk), kExact);
        CHECK(w.total_flow->exact == BigInt(1) << (n - 2));
        // i -> j path counts inside DK_n are 2^(j-i-1)
        if (n <= 9) {
            const auto paths = oracle::pair_paths_by_enumeration(dk);
            for (VertexId i = 0; i < n; ++i) {
                for (VertexId j = i + 1; j < n; ++j) CHECK(paths[i][j] == (std::uint64_t{1} << (j - i - 1)));
            }
        }
    }
}

TEST_CASE("Kirchhoff node law") {
    for (const Network& g : test_networks()) {
        const StandardizedNetwork s = standardize(g);
        const WeightResult exact = spc(s, kExact);
        const WeightResult real = spc(s);
        for (VertexId v = 0; v < s.base.vertex_count(); ++v) {
            BigInt in = 0, out = 0;
            double in_f = 0, out_f = 0;
            for (ArcId a : s.base.in_arcs(v)) {
                in += exact.arc.exact()[a];
                in_f += real.arc.to_double(a);
            }
            for (ArcId a : s.base.out_arcs(v)) {
                out += exact.arc.exact()[a];
                out_f += real.arc.to_double(a);
            }
            CHECK(in == out);
            CHECK(in == exact.vertex.exact()[v]);
            CHECK(std::abs(in_f - out_f) <= 1e-9 * std::max(in_f, 1.0));
        }
    }
}

TEST_CASE("chain inequality and bounds") {
    for (const Network& g : test_networks()) {
        const StandardizedNetwork s = standardize(g);
        const WeightResult c = spc(s, kExact);
        const WeightResult l = splc(s, kExact);
        const WeightResult p = spnp(s, kExact);
        const WeightResult ws = sum_weights(g, kExact);
        const NetworkStats st = network_stats(g);
        const std::size_t delta = std::max(st.max_in_degree, st.max_out_degree);
        const std::size_t depth = depths(s).depth;
        BigInt bound = 1;
        for (std::size_t i = 0; i + 1 < depth; ++i) bound *= std::max<std::size_t>(delta, 1);
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            CHECK(c.arc.exact()[a] <= l.arc.exact()[a]);
            CHECK(l.arc.exact()[a] <= p.arc.exact()[a]);
            CHECK(ws.arc.exact()[a] <= g.vertex_count());
            CHECK(c.arc.exact()[a] <= bound);
        }
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Network g = random_dag(2 + seed % 49, 0.2, seed);
        const WeightResult d = nppc(g, kExact);
        const std::size_t n = g.vertex_count();
        for (ArcId a = 0; a < g.arc_count(); ++a) CHECK(4 * d.arc.exact()[a] <= n * n);
    }
}

TEST_CASE("reversal symmetry") {
    for (const Network& g : test_networks()) {
        const Network r = g.reversed();
        const StandardizedNetwork s = standardize(g);
        const StandardizedNetwork sr = standardize(r);
        const WeightResult c = spc(s, kExact), cr = spc(sr, kExact);
        const WeightResult p = spnp(s, kExact), pr = spnp(sr, kExact);
        const WeightResult d = nppc(g, kExact), dr = nppc(r, kExact);
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            CHECK(c.arc.exact()[a] == cr.arc.exact()[a]);
            CHECK(p.arc.exact()[a] == pr.arc.exact()[a]);
            CHECK(d.arc.exact()[a] == dr.arc.exact()[a]);
        }
    }
}

TEST_CASE("component ratios do not change under disjoint union") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Network a = random_dag(6 + seed % 5, 0.4, seed);
        const Network b = random_dag(5 + seed % 4, 0.5, seed + 1000);
        const Network u = disjoint_union(a, b);
        const StandardizedNetwork sa = standardize(a);
        const StandardizedNetwork su = standardize(u);
        for (auto method : {Method::SPC, Method::SPNP, Method::NPPC}) {
            WeightResult alone, joined;
            if (method == Method::SPC) {
                alone = spc(sa, kExact);
                joined = spc(su, kExact);
            } else if (method == Method::SPNP) {
                alone = spnp(sa, kExact);
                joined = spnp(su, kExact);
            } else {
                alone = nppc(a, kExact);
                joined = nppc(u, kExact);
            }
            const auto& x = alone.arc.exact();
            const auto& y = joined.arc.exact();
            for (ArcId p = 0; p < a.arc_count(); ++p) {
                for (ArcId q = 0; q < a.arc_count(); ++q) {
                    if (x[q] == 0) continue;
                    CHECK(cpp_rational(x[p], x[q]) == cpp_rational(y[p], y[q]));
                }
            }
            const auto& tv = alone.vertex.exact();
            const auto& tu = joined.vertex.exact();
            for (VertexId v = 1; v < a.vertex_count(); ++v) {
                if (tv[0] == 0) continue;
                CHECK(cpp_rational(tv[v], tv[0]) == cpp_rational(tu[v], tu[0]));
            }
        }
    }
}

TEST_CASE("deleting arcs never increases weights") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Network g = random_dag(6 + seed % 8, 0.4, seed);
        if (g.arc_count() < 2) continue;
        std::vector<ArcId> drop;
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            if (rng() % 4 == 0) drop.push_back(a);
        }
        const Network h = without_arcs(g, drop);
        std::vector<ArcId> kept;  // kept[i] = index in g of arc i of h
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            if (!std::binary_search(drop.begin(), drop.end(), a)) kept.push_back(a);
        }
        const StandardizedNetwork sg = standardize(g);
        const StandardizedNetwork sh = standardize(h);
        const WeightResult cg = spc(sg, kExact), ch = spc(sh, kExact);
        const WeightResult pg = spnp(sg, kExact), ph = spnp(sh, kExact);
        const WeightResult dg = nppc(g, kExact), dh = nppc(h, kExact);
        for (ArcId i = 0; i < h.arc_count(); ++i) {
            CHECK(ch.arc.exact()[i] <= cg.arc.exact()[kept[i]]);
            CHECK(ph.arc.exact()[i] <= pg.arc.exact()[kept[i]]);
            CHECK(dh.arc.exact()[i] <= dg.arc.exact()[kept[i]]);
        }
    }
}

TEST_CASE("normalization") {
    const StandardizedNetwork d = standardize(fixture::diamond());
    const WeightResult n = normalize(spc(d, kExact));
    CHECK(n.mode() == NumericMode::Float);
    CHECK(n.normalized);
    CHECK(n.arc.to_double(0) == 0.5);
    CHECK(n.arc.to_double(4) == 1.0);

    const WeightResult path = normalize(spc(standardize(fixture::path(6))));
    for (std::size_t a = 0; a < path.arc.size(); ++a) CHECK(path.arc.to_double(a) == 1.0);

    const WeightResult layered = normalize(spc(standardize(fixture::layered())));
    CHECK(std::abs(layered.arc.to_double(0) + layered.arc.to_double(1) - 1.0) <= 1e-12);
    CHECK(std::abs(layered.arc.to_double(2) + layered.arc.to_double(3) - 1.0) <= 1e-12);
    CHECK(std::abs(layered.arc.to_double(4) + layered.arc.to_double(5) - 1.0) <= 1e-12);

    for (const Network& g : test_networks()) {
        const StandardizedNetwork s = standardize(g);
        for (auto mode : {NumericMode::Float, kExact, NumericMode::LogSpace}) {
            const WeightResult r = normalize(spc(s, mode));
            for (std::size_t a = 0; a < r.arc.size(); ++a) {
                CHECK(r.arc.to_double(a) >= 0.0);
                CHECK(r.arc.to_double(a) <= 1.0 + 1e-12);
            }
            double from_s = 0.0;
            for (ArcId a : s.source_arcs) from_s += r.arc.to_double(a);
            CHECK(std::abs(from_s - 1.0) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(normalize(nppc(fixture::diamond())), ArgumentError);
}

TEST_CASE("log transform") {
    WeightResult r;
    r.method = Method::SPC;
    r.arc = WeightVector(std::vector<double>{1.0, std::exp(1.0), std::exp(2.0)});
    r.vertex = r.arc;
    const WeightResult l = log_transform(r);
    CHECK(l.arc.to_double(0) == 0.0);
    CHECK(l.arc.to_double(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(l.arc.to_double(2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(l.logged);

    r.arc = WeightVector(std::vector<double>{0.0, std::exp(1.0), 1.0});
    const WeightResult z = log_transform(r);
    CHECK(z.arc.to_double(0) == doctest::Approx(-1.0));
    CHECK(z.floored_arcs == std::vector<ArcId>{0});

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const WeightResult w = spc(standardize(random_dag(30, 0.2, seed)));
        const WeightResult lw = log_transform(w);
        for (std::size_t i = 0; i + 1 < w.arc.size(); ++i) {
            CHECK(w.arc.compare(i, i + 1) == lw.arc.compare(i, i + 1));
        }
    }
}

TEST_CASE("numeric modes agree") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const StandardizedNetwork s = standardize(random_dag(40, 0.3, seed));
        const WeightResult e = spnp(s, kExact);
        const WeightResult f = spnp(s, NumericMode::Float);
        const WeightResult l = spnp(s, NumericMode::LogSpace);
        for (std::size_t a = 0; a < e.arc.size(); ++a) {
            const double want = to_double(e.arc.exact()[a]);
            CHECK(f.arc.to_double(a) == doctest::Approx(want).epsilon(1e-12));
            CHECK(l.arc.to_log(a) == doctest::Approx(std::log(want)).epsilon(1e-12));
        }
    }
}

TEST_CASE("float overflow is reported, other modes carry on") {
    // DK_1100 has 2^1098 s-t paths, beyond double range
    const StandardizedNetwork s = standardize(complete_acyclic(1100));
    CHECK_THROWS_AS(spc(s, NumericMode::Float), OverflowError);
    const WeightResult l = spc(s, NumericMode::LogSpace);
    CHECK(l.total_flow->to_log() == doctest::Approx(1098 * std::log(2.0)).epsilon(1e-12));
    const WeightResult e = spc(s, kExact);
    CHECK(e.total_flow->exact == BigInt(1) << 1098);
    const WeightResult n = normalize(l);
    CHECK(n.arc.to_double(s.feedback) == doctest::Approx(1.0));
}

TEST_CASE("closure weights lifted to the standardized network") {
    const StandardizedNetwork s = standardize(fixture::diamond());
    const WeightResult d = nppc(fixture::diamond());
    const WeightVector lifted = lift_closure_weights(s, d);
    REQUIRE(lifted.size() == s.base.arc_count());
    for (ArcId a = 0; a < 4; ++a) CHECK(lifted.to_double(a) == d.arc.to_double(a));
    CHECK(lifted.to_double(4) == 4.0);  // (s,a): desc(a)
    CHECK(lifted.to_double(5) == 4.0);  // (d,t): anc(d)
    CHECK(lifted.to_double(s.feedback) == 0.0);
}

TEST_CASE("method names") {
    CHECK(parse_method("splc") == Method::SPLC);
    CHECK_FALSE(parse_method("xyz").has_value());
    CHECK(to_string(Method::SUM) == "sum");
    CHECK(is_path_count(Method::SPNP));
    CHECK_FALSE(is_path_count(Method::NPPC));
}
