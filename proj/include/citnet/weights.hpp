#pragma once

#include "citnet/acyclic.hpp"
#include "citnet/network.hpp"
#include "citnet/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace citnet {

enum class Method { SPC, SPLC, SPNP, NPPC, SUM };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);
bool is_path_count(Method method);  // SPC, SPLC, SPNP

struct WeightResult {
    Method method = Method::SPC;
    // Path-count methods: aligned with the arcs / vertices of the standardized
    // network, feedback arc included. NPPC and SUM: aligned with the
    // original network.
    WeightVector arc;
    WeightVector vertex;
    std::optional<Count> total_flow;  // path-count methods only

    // SUM only: w_s / n.
    WeightVector arc_scaled;
    // NPPC and SUM: sizes of the reflexive-transitive in/out closures.
    std::vector<std::uint64_t> closure_in;
    std::vector<std::uint64_t> closure_out;

    bool normalized = false;
    bool logged = false;
    // log_transform: arcs whose zero weight was replaced by the floor value.
    std::vector<ArcId> floored_arcs;

    NumericMode mode() const noexcept { return arc.mode(); }
};

// Search path count: number of s-t paths through each arc. The feedback arc
// carries the total flow N(t, s). Vertex weight: N-(u) * N+(u).
WeightResult spc(const StandardizedNetwork& std_net, NumericMode mode = NumericMode::Float);

// SPC on the network where s also links to every vertex that is not already
// its successor, so each vertex is an origin of search paths.
WeightResult splc(const StandardizedNetwork& std_net, NumericMode mode = NumericMode::Float);

// SPC on the network where s links to every vertex and every vertex links to t.
// On original arcs this equals L-(u) * L+(v).
WeightResult spnp(const StandardizedNetwork& std_net, NumericMode mode = NumericMode::Float);

// Node pair projection count: |ancestors(u)| * |descendants(v)|, both closures
// reflexive. O(nm). Throws CycleError on cyclic input.
WeightResult nppc(const Network& net, NumericMode mode = NumericMode::Float);

// |ancestors(u)| + |descendants(v)|, with arc_scaled = that / n.
WeightResult sum_weights(const Network& net, NumericMode mode = NumericMode::Float);

// Coefficients p(u, k): number of paths of length k ending at u (minus) or
// starting at u (plus), over original vertices only. s has the zero
// polynomial in `minus`, t in `plus`.
struct PathPolynomials {
    std::vector<WeightVector> minus;
    std::vector<WeightVector> plus;
};

PathPolynomials path_polynomials(const StandardizedNetwork& std_net, NumericMode mode = NumericMode::ExactInteger);

// Per-vertex polynomial values at x: L-(u) = P-(u; x), L+(u) = P+(u; x).
struct PathTotals {
    WeightVector minus;
    WeightVector plus;
};

PathTotals evaluate(const PathPolynomials& polys, double x = 1.0);

// Aged path counts evaluated directly from the recurrence
// L-(u) = 1 + alpha * sum L-(pred). Arc weights L-(u) * L+(v) on original
// arcs; auxiliary arcs and the feedback arc are weighted as in spnp, so
// alpha == 1 reproduces spnp. ExactInteger mode is accepted only for alpha == 1.
WeightResult aged_path_counts(const StandardizedNetwork& std_net, double alpha, NumericMode mode = NumericMode::Float);

// Divides every arc and vertex weight of a path-count result by its total
// flow. The result is in Float mode with values in [0, 1].
WeightResult normalize(const WeightResult& result);

// Natural logarithm of every arc and vertex weight, in Float mode. Zero
// weights become (smallest log of a positive weight) - 1 and are listed in
// floored_arcs.
WeightResult log_transform(const WeightResult& result);

// NPPC / SUM arc weights extended to the arcs of the standardized network so
// they can drive main path and CPM extraction: (s, v) gets the weight the
// arc would have if s were v's only ancestor, (u, t) likewise for
// descendants, and the feedback arc gets 0.
WeightVector lift_closure_weights(const StandardizedNetwork& std_net, const WeightResult& result, bool scaled = false);

}  // namespace citnet
