#include "citnet/weights.hpp"

#include "arith.hpp"
#include "citnet/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace citnet {

using detail::Arith;
using detail::dispatch;
using detail::LogNum;

namespace {

template <class T>
struct Flow {
    std::vector<T> minus;  // N-(v): s-v paths
    std::vector<T> plus;   // N+(v): v-t paths
};

template <class T>
Flow<T> flow_counts(const Network& g, VertexId s, VertexId t, ArcId feedback, const TopologicalOrder& order) {
    using A = Arith<T>;
    const std::size_t n = g.vertex_count();
    Flow<T> f{std::vector<T>(n, A::zero()), std::vector<T>(n, A::zero())};
    for (VertexId v : order.sequence) {
        if (v == s) {
            f.minus[v] = A::one();
            continue;
        }
        T sum = A::zero();
        for (ArcId a : g.in_arcs(v)) {
            if (a != feedback) sum = A::add(sum, f.minus[g.arc(a).tail]);
        }
        f.minus[v] = std::move(sum);
    }
    for (auto it = order.sequence.rbegin(); it != order.sequence.rend(); ++it) {
        const VertexId v = *it;
        if (v == t) {
            f.plus[v] = A::one();
            continue;
        }
        T sum = A::zero();
        for (ArcId a : g.out_arcs(v)) {
            if (a != feedback) sum = A::add(sum, f.plus[g.arc(a).head]);
        }
        f.plus[v] = std::move(sum);
    }
    return f;
}

// SPC on g (which extends std_net.base by extra arcs appended after it); the
// arc weights are reported for the first `report_arcs` arcs only.
template <class T>
WeightResult spc_on(const Network& g, const StandardizedNetwork& std_net, std::size_t report_arcs, Method method) {
    using A = Arith<T>;
    const auto f = flow_counts<T>(g, std_net.source, std_net.sink, std_net.feedback, std_net.order);
    std::vector<T> arc(report_arcs, A::zero());
    for (ArcId a = 0; a < report_arcs; ++a) {
        const Arc& e = g.arc(a);
        arc[a] = a == std_net.feedback ? f.minus[std_net.sink] : A::mul(f.minus[e.tail], f.plus[e.head]);
    }
    std::vector<T> vertex(g.vertex_count(), A::zero());
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertex[v] = A::mul(f.minus[v], f.plus[v]);

    WeightResult r;
    r.method = method;
    r.total_flow = A::count(f.minus[std_net.sink]);
    r.arc = A::pack(std::move(arc));
    r.vertex = A::pack(std::move(vertex));
    return r;
}

enum class Extension { Links, Pairs };

// std_net.base plus s -> u for every u not yet a successor of s, and for
// Pairs also u -> t for every u not yet a predecessor of t.
Network extend(const StandardizedNetwork& std_net, Extension kind) {
    const Network& base = std_net.base;
    std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
    for (VertexId u = 0; u < std_net.original_vertices; ++u) {
        if (base.in_degree(u) > 0 && !(base.in_degree(u) == 1 && base.arc(base.in_arcs(u)[0]).tail == std_net.source)) {
            arcs.push_back({std_net.source, u, 1.0});
        }
    }
    if (kind == Extension::Pairs) {
        for (VertexId u = 0; u < std_net.original_vertices; ++u) {
            const auto out = base.out_arcs(u);
            if (!(out.size() == 1 && base.arc(out[0]).head == std_net.sink)) arcs.push_back({u, std_net.sink, 1.0});
        }
    }
    return Network({base.labels().begin(), base.labels().end()}, std::move(arcs),
                   {base.origins().begin(), base.origins().end()});
}

struct Closures {
    std::vector<std::uint64_t> in;   // |R^-1*(u)| including u
    std::vector<std::uint64_t> out;  // |R*(u)| including u
};

Closures closure_sizes(const Network& net) {
    topological_order(net);  // throws CycleError on cycles and loops
    const std::size_t n = net.vertex_count();
    Closures c{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)};
    std::vector<std::size_t> stamp(n, std::numeric_limits<std::size_t>::max());
    std::vector<VertexId> queue;
    queue.reserve(n);
    std::size_t round = 0;
    auto search = [&](VertexId root, bool forward) {
        queue.clear();
        queue.push_back(root);
        stamp[root] = round;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId v = queue[head];
            for (ArcId a : forward ? net.out_arcs(v) : net.in_arcs(v)) {
                const VertexId w = forward ? net.arc(a).head : net.arc(a).tail;
                if (stamp[w] != round) {
                    stamp[w] = round;
                    queue.push_back(w);
                }
            }
        }
        ++round;
        return static_cast<std::uint64_t>(queue.size());
    };
    for (VertexId v = 0; v < n; ++v) {
        c.out[v] = search(v, true);
        c.in[v] = search(v, false);
    }
    return c;
}

WeightVector counts_to_vector(const std::vector<std::uint64_t>& values, NumericMode mode) {
    return dispatch(mode, [&]<class T>() {
        std::vector<T> out;
        out.reserve(values.size());
        for (auto v : values) out.push_back(Arith<T>::from_count(v));
        return Arith<T>::pack(std::move(out));
    });
}

template <class T>
std::vector<std::vector<T>> polynomials(const StandardizedNetwork& std_net, bool forward) {
    using A = Arith<T>;
    const Network& g = std_net.base;
    std::vector<std::vector<T>> poly(g.vertex_count());
    const VertexId zero_vertex = forward ? std_net.source : std_net.sink;
    auto visit = [&](VertexId v) {
        if (v == zero_vertex) return;
        std::vector<T> p(1, A::one());
        for (ArcId a : forward ? g.in_arcs(v) : g.out_arcs(v)) {
            if (a == std_net.feedback) continue;
            const auto& q = poly[forward ? g.arc(a).tail : g.arc(a).head];
            if (p.size() < q.size() + 1) p.resize(q.size() + 1, A::zero());
            for (std::size_t k = 0; k < q.size(); ++k) p[k + 1] = A::add(p[k + 1], q[k]);
        }
        poly[v] = std::move(p);
    };
    if (forward) {
        for (VertexId v : std_net.order.sequence) visit(v);
    } else {
        for (auto it = std_net.order.sequence.rbegin(); it != std_net.order.sequence.rend(); ++it) visit(*it);
    }
    return poly;
}

template <class T>
WeightResult aged(const StandardizedNetwork& std_net, double alpha) {
    using A = Arith<T>;
    const Network& g = std_net.base;
    const std::size_t n = g.vertex_count();
    const T factor = alpha == 1.0 ? A::one() : A::from_real(alpha);
    const VertexId s = std_net.source;
    const VertexId t = std_net.sink;

    auto is_inner = [&](VertexId v) { return std_net.is_original_vertex(v); };
    std::vector<T> minus(n, A::zero());
    std::vector<T> plus(n, A::zero());
    for (VertexId v : std_net.order.sequence) {
        if (!is_inner(v)) continue;
        T sum = A::zero();
        for (ArcId a : g.in_arcs(v)) {
            if (is_inner(g.arc(a).tail)) sum = A::add(sum, minus[g.arc(a).tail]);
        }
        minus[v] = A::add(A::one(), A::mul(factor, sum));
    }
    for (auto it = std_net.order.sequence.rbegin(); it != std_net.order.sequence.rend(); ++it) {
        const VertexId v = *it;
        if (!is_inner(v)) continue;
        T sum = A::zero();
        for (ArcId a : g.out_arcs(v)) {
            if (is_inner(g.arc(a).head)) sum = A::add(sum, plus[g.arc(a).head]);
        }
        plus[v] = A::add(A::one(), A::mul(factor, sum));
    }
    // the extended network routes one path from s into and one out to t per vertex
    T total_in = A::zero();
    T total_out = A::zero();
    for (VertexId v = 0; v < std_net.original_vertices; ++v) {
        total_in = A::add(total_in, minus[v]);
        total_out = A::add(total_out, plus[v]);
    }
    std::vector<T> arc(g.arc_count(), A::zero());
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        const Arc& e = g.arc(a);
        if (a == std_net.feedback) {
            arc[a] = total_in;
        } else if (e.tail == s) {
            arc[a] = plus[e.head];
        } else if (e.head == t) {
            arc[a] = minus[e.tail];
        } else {
            arc[a] = A::mul(minus[e.tail], plus[e.head]);
        }
    }
    std::vector<T> vertex(n, A::zero());
    for (VertexId v = 0; v < std_net.original_vertices; ++v) vertex[v] = A::mul(minus[v], plus[v]);
    vertex[s] = total_out;
    vertex[t] = total_in;

    WeightResult r;
    r.method = Method::SPNP;
    r.total_flow = A::count(total_in);
    r.arc = A::pack(std::move(arc));
    r.vertex = A::pack(std::move(vertex));
    return r;
}

WeightVector divide(const WeightVector& w, const Count& total) {
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        switch (w.mode()) {
            case NumericMode::Float: out[i] = w.reals()[i] / total.real; break;
            case NumericMode::LogSpace: out[i] = std::exp(w.reals()[i] - total.real); break;
            case NumericMode::ExactInteger:
                out[i] = boost::multiprecision::cpp_rational(w.exact()[i], total.exact).convert_to<double>();
                break;
        }
    }
    return WeightVector(std::move(out), NumericMode::Float);
}

WeightVector log_values(const WeightVector& w, std::vector<ArcId>* floored) {
    std::vector<double> out(w.size());
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[i] = w.to_log(i);
        if (std::isfinite(out[i])) smallest = std::min(smallest, out[i]);
    }
    const double floor = (std::isfinite(smallest) ? smallest : 0.0) - 1.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!std::isfinite(out[i])) {
            out[i] = floor;
            if (floored) floored->push_back(static_cast<ArcId>(i));
        }
    }
    return WeightVector(std::move(out), NumericMode::Float);
}

}  // namespace

std::string_view to_string(Method method) {
    switch (method) {
        case Method::SPC: return "spc";
        case Method::SPLC: return "splc";
        case Method::SPNP: return "spnp";
        case Method::NPPC: return "nppc";
        case Method::SUM: return "sum";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view text) {
    for (Method m : {Method::SPC, Method::SPLC, Method::SPNP, Method::NPPC, Method::SUM}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

bool is_path_count(Method method) {
    return method == Method::SPC || method == Method::SPLC || method == Method::SPNP;
}

WeightResult spc(const StandardizedNetwork& std_net, NumericMode mode) {
    return dispatch(mode, [&]<class T>() {
        return spc_on<T>(std_net.base, std_net, std_net.base.arc_count(), Method::SPC);
    });
}

WeightResult splc(const StandardizedNetwork& std_net, NumericMode mode) {
    const Network ext = extend(std_net, Extension::Links);
    return dispatch(mode, [&]<class T>() {
        return spc_on<T>(ext, std_net, std_net.base.arc_count(), Method::SPLC);
    });
}

WeightResult spnp(const StandardizedNetwork& std_net, NumericMode mode) {
    const Network ext = extend(std_net, Extension::Pairs);
    return dispatch(mode, [&]<class T>() {
        return spc_on<T>(ext, std_net, std_net.base.arc_count(), Method::SPNP);
    });
}

WeightResult nppc(const Network& net, NumericMode mode) {
    const Closures c = closure_sizes(net);
    std::vector<std::uint64_t> arc(net.arc_count());
    for (ArcId a = 0; a < net.arc_count(); ++a) arc[a] = c.in[net.arc(a).tail] * c.out[net.arc(a).head];
    std::vector<std::uint64_t> vertex(net.vertex_count());
    for (VertexId v = 0; v < net.vertex_count(); ++v) vertex[v] = c.in[v] * c.out[v];

    WeightResult r;
    r.method = Method::NPPC;
    r.arc = counts_to_vector(arc, mode);
    r.vertex = counts_to_vector(vertex, mode);
    r.closure_in = c.in;
    r.closure_out = c.out;
    return r;
}

WeightResult sum_weights(const Network& net, NumericMode mode) {
    const Closures c = closure_sizes(net);
    std::vector<std::uint64_t> arc(net.arc_count());
    std::vector<double> scaled(net.arc_count());
    const auto n = static_cast<double>(net.vertex_count());
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        arc[a] = c.in[net.arc(a).tail] + c.out[net.arc(a).head];
        scaled[a] = static_cast<double>(arc[a]) / n;
    }
    std::vector<std::uint64_t> vertex(net.vertex_count());
    for (VertexId v = 0; v < net.vertex_count(); ++v) vertex[v] = c.in[v] + c.out[v];

    WeightResult r;
    r.method = Method::SUM;
    r.arc = counts_to_vector(arc, mode);
    r.vertex = counts_to_vector(vertex, mode);
    r.arc_scaled = WeightVector(std::move(scaled), NumericMode::Float);
    r.closure_in = c.in;
    r.closure_out = c.out;
    return r;
}

PathPolynomials path_polynomials(const StandardizedNetwork& std_net, NumericMode mode) {
    return dispatch(mode, [&]<class T>() {
        PathPolynomials out;
        for (auto& p : polynomials<T>(std_net, true)) out.minus.push_back(Arith<T>::pack(std::move(p)));
        for (auto& p : polynomials<T>(std_net, false)) out.plus.push_back(Arith<T>::pack(std::move(p)));
        return out;
    });
}

PathTotals evaluate(const PathPolynomials& polys, double x) {
    auto eval_all = [&](const std::vector<WeightVector>& family) {
        const NumericMode mode = family.empty() ? NumericMode::Float : family.front().mode();
        return dispatch(mode, [&]<class T>() {
            using A = Arith<T>;
            if (mode == NumericMode::ExactInteger && x != std::floor(x)) {
                throw ArgumentError("exact polynomials can only be evaluated at integers");
            }
            const T point = mode == NumericMode::ExactInteger ? T(A::from_count(static_cast<std::uint64_t>(x)))
                                                              : A::from_real(x);
            std::vector<T> values;
            values.reserve(family.size());
            for (const auto& p : family) {
                T acc = A::zero();
                for (std::size_t k = p.size(); k-- > 0;) acc = A::add(A::mul(acc, point), detail::load<T>(p, k));
                values.push_back(std::move(acc));
            }
            return A::pack(std::move(values));
        });
    };
    return {eval_all(polys.minus), eval_all(polys.plus)};
}

WeightResult aged_path_counts(const StandardizedNetwork& std_net, double alpha, NumericMode mode) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ArgumentError("alpha must lie in (0, 1]");
    if (mode == NumericMode::ExactInteger && alpha != 1.0) {
        throw ArgumentError("exact mode supports aged path counts only for alpha = 1");
    }
    return dispatch(mode, [&]<class T>() { return aged<T>(std_net, alpha); });
}

WeightResult normalize(const WeightResult& result) {
    if (!is_path_count(result.method) || !result.total_flow) {
        throw ArgumentError("normalization needs a path-count result (spc, splc or spnp)");
    }
    if (result.logged) throw ArgumentError("cannot normalize log-transformed weights");
    const Count& total = *result.total_flow;
    const bool zero = total.mode == NumericMode::ExactInteger ? total.exact.is_zero()
                      : total.mode == NumericMode::LogSpace ? std::isinf(total.real) && total.real < 0
                                                            : total.real == 0.0;
    if (zero) throw Error("internal error: total flow is zero");
    WeightResult out = result;
    out.arc = divide(result.arc, total);
    out.vertex = divide(result.vertex, total);
    out.normalized = true;
    return out;
}

WeightResult log_transform(const WeightResult& result) {
    WeightResult out = result;
    out.floored_arcs.clear();
    out.arc = log_values(result.arc, &out.floored_arcs);
    out.vertex = log_values(result.vertex, nullptr);
    if (!result.arc_scaled.empty()) out.arc_scaled = log_values(result.arc_scaled, nullptr);
    out.logged = true;
    return out;
}

WeightVector lift_closure_weights(const StandardizedNetwork& std_net, const WeightResult& result, bool scaled) {
    if (result.method != Method::NPPC && result.method != Method::SUM) {
        throw ArgumentError("lift_closure_weights needs an nppc or sum result");
    }
    const bool sum = result.method == Method::SUM;
    const WeightVector& source = scaled && sum ? result.arc_scaled : result.arc;
    if (source.size() != std_net.original_arcs) throw ArgumentError("weights do not match the network");
    const double n = static_cast<double>(std_net.original_vertices);
    auto aux = [&](std::uint64_t closure) {
        const double raw = sum ? static_cast<double>(closure + 1) : static_cast<double>(closure);
        return scaled && sum ? raw / n : raw;
    };
    const Network& g = std_net.base;

    if (source.mode() == NumericMode::ExactInteger) {
        std::vector<BigInt> out(g.arc_count(), BigInt(0));
        for (ArcId a = 0; a < std_net.original_arcs; ++a) out[a] = source.exact()[a];
        for (ArcId a : std_net.source_arcs) out[a] = BigInt(static_cast<std::uint64_t>(aux(result.closure_out[g.arc(a).head])));
        for (ArcId a : std_net.sink_arcs) out[a] = BigInt(static_cast<std::uint64_t>(aux(result.closure_in[g.arc(a).tail])));
        return WeightVector(std::move(out));
    }
    const bool log = source.mode() == NumericMode::LogSpace;
    std::vector<double> out(g.arc_count(), log ? -std::numeric_limits<double>::infinity() : 0.0);
    for (ArcId a = 0; a < std_net.original_arcs; ++a) out[a] = source.reals()[a];
    auto store = [&](double v) { return log ? std::log(v) : v; };
    for (ArcId a : std_net.source_arcs) out[a] = store(aux(result.closure_out[g.arc(a).head]));
    for (ArcId a : std_net.sink_arcs) out[a] = store(aux(result.closure_in[g.arc(a).tail]));
    return WeightVector(std::move(out), source.mode());
}

}  // namespace citnet
