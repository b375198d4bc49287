#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "baco/types.hpp"

namespace baco {

/// Length of the maximal all-ones prefix, in 0..n.
std::uint32_t leading_ones(const BitString &bits);

/// Number of one-bits, in 0..n.
std::uint32_t one_max(const BitString &bits);

/// Final-position-prefix objective over the canonical keys 0..n-1: the number
/// of leading positions already holding their sorted key. Never returns n-1
/// (if the first n-1 keys are placed, the last one is too).
std::uint32_t final_position_prefix(const Permutation &order);

/// Same objective for an arbitrary set of unique keys: order[i] indexes into
/// keys, and the reference order is keys sorted ascending. Reduces to the
/// canonical form by rank.
template <typename Key>
std::uint32_t final_position_prefix(const Permutation &order, std::span<const Key> keys) {
    std::vector<std::uint32_t> by_rank(keys.size());
    std::iota(by_rank.begin(), by_rank.end(), 0u);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    std::vector<std::uint32_t> rank(keys.size());
    for (std::uint32_t r = 0; r < by_rank.size(); ++r) rank[by_rank[r]] = r;

    Permutation canonical(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) canonical[i] = rank[order[i]];
    return final_position_prefix(canonical);
}

/// Objective value of the optimum; for all three problems this equals n.
inline std::uint32_t optimal_value(std::uint32_t n) { return n; }

} // namespace baco
