#pragma once

#include "citnet/network.hpp"

#include <cstdint>

namespace citnet {

// DK_n: all arcs (i, j) with i < j. Throws ArgumentError for n < 2.
Network complete_acyclic(std::size_t n);

// Random DAG on n vertices with arcs only from lower to higher index; each
// of the n(n-1)/2 pairs is present independently with probability `density`.
//
// The algorithm is fixed so results are portable bit for bit:
//   * generator: std::mt19937_64 seeded with `seed`;
//   * uniform u in [0,1): (draw >> 11) * 2^-53;
//   * pairs (i, j), i < j, are visited in lexicographic order and the gap to
//     the next selected pair is floor(log(1 - u) / log(1 - density)), one
//     draw per selected pair. density == 1 selects every pair without drawing.
//
// Throws ArgumentError for n < 2 or density outside (0, 1].
Network random_dag(std::size_t n, double density, std::uint64_t seed);

}  // namespace citnet
