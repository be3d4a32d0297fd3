#include "citnet/rank.hpp"

#include "citnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace citnet {

namespace {

double normalize_in_place(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (double& x : v) x /= norm;
    }
    return norm;
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(d);
}

std::vector<VertexId> ranking(const std::vector<double>& score) {
    std::vector<VertexId> order(score.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return score[a] > score[b]; });
    return order;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

HitsScores hits(const Network& net, double tolerance, std::size_t max_iterations) {
    if (net.arc_count() == 0) throw ArgumentError("hits needs at least one arc");
    if (!(tolerance > 0.0)) throw ArgumentError("hits tolerance must be positive");
    const std::size_t n = net.vertex_count();

    // binary adjacency: skip repeated (tail, head) pairs, adjacency lists are sorted
    auto distinct = [&](std::span<const ArcId> arcs, auto endpoint) {
        std::vector<VertexId> out;
        for (ArcId a : arcs) {
            const VertexId w = endpoint(net.arc(a));
            if (out.empty() || out.back() != w) out.push_back(w);
        }
        return out;
    };
    std::vector<std::vector<VertexId>> citers(n), cited(n);
    for (VertexId v = 0; v < n; ++v) {
        citers[v] = distinct(net.out_arcs(v), [](const Arc& e) { return e.head; });
        cited[v] = distinct(net.in_arcs(v), [](const Arc& e) { return e.tail; });
    }

    HitsScores s;
    s.hub.assign(n, 1.0);
    s.authority.assign(n, 1.0);
    normalize_in_place(s.hub);
    normalize_in_place(s.authority);
    // Each vector takes two half-steps through the other side, so hub and
    // authority are computed by the same code with the roles swapped.
    auto half_step = [n](const std::vector<std::vector<VertexId>>& adj, const std::vector<double>& from) {
        std::vector<double> to(n, 0.0);
        for (VertexId u = 0; u < n; ++u) {
            double x = 0.0;
            for (VertexId v : adj[u]) x += from[v];
            to[u] = x;
        }
        normalize_in_place(to);
        return to;
    };
    for (s.iterations = 1; s.iterations <= max_iterations; ++s.iterations) {
        std::vector<double> authority = half_step(citers, half_step(cited, s.authority));
        std::vector<double> hub = half_step(cited, half_step(citers, s.hub));
        s.residual = std::max(distance(authority, s.authority), distance(hub, s.hub));
        s.authority.swap(authority);
        s.hub.swap(hub);
        if (s.residual < tolerance) {
            s.converged = true;
            return s;
        }
    }
    s.iterations = max_iterations;
    return s;
}

std::vector<RankRow> top_ranks(const HitsScores& scores, std::size_t count) {
    const auto hubs = ranking(scores.hub);
    const auto auths = ranking(scores.authority);
    count = std::min(count, hubs.size());
    std::vector<RankRow> rows(count);
    for (std::size_t i = 0; i < count; ++i) {
        rows[i] = {i + 1, hubs[i], scores.hub[hubs[i]], auths[i], scores.authority[auths[i]]};
    }
    return rows;
}

void write_rank_table(std::ostream& out, const Network& net, const std::vector<RankRow>& rows) {
    std::size_t width = 6;
    for (const auto& r : rows) width = std::max(width, net.label(r.hub).size());
    char buf[64];
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    out << "Rank  " << pad("Hub", 9) << "  " << pad("Hub Id", width) << "  " << pad("Authority", 9) << "  Authority Id\n";
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%4zu  %9.5f  ", r.rank, r.hub_score);
        out << buf << pad(net.label(r.hub), width);
        std::snprintf(buf, sizeof buf, "  %9.5f  ", r.authority_score);
        out << buf << net.label(r.authority) << '\n';
    }
}

void write_rank_csv(std::ostream& out, const Network& net, const std::vector<RankRow>& rows) {
    out << "rank,hub_score,hub_id,hub_label,authority_score,authority_id,authority_label\n";
    for (const auto& r : rows) {
        char hub[32], auth[32];
        std::snprintf(hub, sizeof hub, "%.12g", r.hub_score);
        std::snprintf(auth, sizeof auth, "%.12g", r.authority_score);
        out << r.rank << ',' << hub << ',' << (r.hub + 1) << ',' << csv_field(net.label(r.hub)) << ',' << auth << ','
            << (r.authority + 1) << ',' << csv_field(net.label(r.authority)) << '\n';
    }
}

}  // namespace citnet
