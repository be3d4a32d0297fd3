#pragma once

#include "citnet/network.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace citnet {

// Kleinberg hubs and authorities on the citation relation u R v ("v cites u").
// Authorities are cited works, so an arc (u, v) feeds hub(v) into
// authority(u) and authority(u) into hub(v). Arc weights and multiplicities
// are ignored.
struct HitsScores {
    std::vector<double> hub;
    std::vector<double> authority;
    std::size_t iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

inline constexpr double kHitsTolerance = 1e-12;
inline constexpr std::size_t kHitsMaxIterations = 1000;

// Alternating power iteration from all-ones vectors, normalizing to unit
// Euclidean length after every half-step:
//   hub(v)       = sum over arcs (u, v) of authority(u)
//   authority(u) = sum over arcs (u, v) of hub(v)
// One iteration moves authority through hub and back, and hub through
// authority and back, each from its own previous value. Reversing the network
// therefore swaps the two vectors exactly.
// Stops when both vectors move by less than `tolerance` (Euclidean); otherwise
// returns after max_iterations with converged = false. Throws ArgumentError
// for a network without arcs or a non-positive tolerance.
HitsScores hits(const Network& net, double tolerance = kHitsTolerance, std::size_t max_iterations = kHitsMaxIterations);

// Rank table of the top `count` hubs and authorities.
struct RankRow {
    std::size_t rank = 0;
    VertexId hub = 0;
    double hub_score = 0.0;
    VertexId authority = 0;
    double authority_score = 0.0;
};

std::vector<RankRow> top_ranks(const HitsScores& scores, std::size_t count);

void write_rank_table(std::ostream& out, const Network& net, const std::vector<RankRow>& rows);
void write_rank_csv(std::ostream& out, const Network& net, const std::vector<RankRow>& rows);

}  // namespace citnet
