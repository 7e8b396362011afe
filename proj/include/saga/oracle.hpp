#pragma once

#include <cstddef>
#include <vector>

#include "saga/graph.hpp"
#include "saga/partition_types.hpp"

namespace saga {

enum class Balance { Algorithm1Sizes, Unconstrained };

inline constexpr std::size_t kOracleMaxVertices = 12;

// Subset sizes (descending) produced by repeatedly halving the largest
// subset of n vertices until there are k subsets.
std::vector<std::size_t> bisection_size_profile(std::size_t n, int k);

// Exhaustive minimum k-cut over all partitions of g's vertices into k
// non-empty subsets, optionally restricted to bisection_size_profile.
// Equal cuts (within 1e-12) resolve to the canonically smallest partition.
// Throws TooLarge above kOracleMaxVertices vertices.
Partition oracle_min_kcut(const AffinityGraph& g, int k, Balance balance);

}  // namespace saga
