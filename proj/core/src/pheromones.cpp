#include "baco/pheromones.hpp"

#include <stdexcept>
#include <utility>

namespace baco {

ChainPheromones::ChainPheromones(std::uint32_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("problem size must be at least 1");
}

void ChainPheromones::deposit(BitString path) {
    if (path.size() != n_) throw std::invalid_argument("path length does not match problem size");
    best_ = std::move(path);
}

PermutationPheromones::PermutationPheromones(std::uint32_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("problem size must be at least 1");
}

void PermutationPheromones::deposit(Permutation path) {
    if (path.size() != n_ || !is_valid_permutation(path)) {
        throw std::invalid_argument("path is not a permutation of 0..n-1");
    }
    best_ = std::move(path);
}

BitString chain_walk(const ChainPheromones &state, PheromoneRatio ratio, RandomSource &rng) {
    const std::uint32_t n = state.size();
    BitString out(n);
    if (!state.initialized()) {
        for (std::uint32_t i = 0; i < n; ++i) out[i] = rng.next_unit() < 0.5 ? 1 : 0;
        return out;
    }
    const BitString &best = state.best();
    const double keep = 1.0 / (1.0 + ratio.value());
    for (std::uint32_t i = 0; i < n; ++i) {
        const bool follow = rng.next_unit() < keep;
        out[i] = follow ? best[i] : static_cast<std::uint8_t>(1 - best[i]);
    }
    return out;
}

Permutation permutation_walk(const PermutationPheromones &state, PheromoneRatio ratio,
                             RandomSource &rng) {
    const std::uint32_t n = state.size();
    Permutation out;
    out.reserve(n);

    // Unvisited nodes with positional lookup for O(1) swap-removal.
    Permutation remaining(n);
    std::vector<std::uint32_t> slot_of(n);
    std::vector<bool> visited(n, false);
    for (std::uint32_t v = 0; v < n; ++v) {
        remaining[v] = v;
        slot_of[v] = v;
    }
    auto remove_node = [&](std::uint32_t v) {
        const std::uint32_t slot = slot_of[v];
        const std::uint32_t last = remaining.back();
        remaining[slot] = last;
        slot_of[last] = slot;
        remaining.pop_back();
        visited[v] = true;
    };

    const bool guided = state.initialized();
    // successor_of[v] = node after v on the best path; n means none.
    std::vector<std::uint32_t> successor_of;
    std::uint32_t first_best = n;
    if (guided) {
        const Permutation &best = state.best();
        successor_of.assign(n, n);
        for (std::uint32_t k = 0; k + 1 < n; ++k) successor_of[best[k]] = best[k + 1];
        first_best = best[0];
    }

    const double t = ratio.value();
    std::uint32_t current = n; // start node sentinel
    while (!remaining.empty()) {
        const std::uint64_t r = remaining.size();
        std::uint32_t successor = n;
        if (guided) successor = (current == n) ? first_best : successor_of[current];
        const bool has_marked_edge = successor < n && !visited[successor];

        std::uint32_t chosen;
        if (r == 1) {
            chosen = remaining[0];
        } else if (has_marked_edge) {
            const double p_marked = 1.0 / (1.0 + static_cast<double>(r - 1) * t);
            if (rng.next_unit() < p_marked) {
                chosen = successor;
            } else {
                // Uniform among the other r-1 candidates.
                std::uint64_t idx = rng.next_below(r - 1);
                if (idx >= slot_of[successor]) ++idx;
                chosen = remaining[idx];
            }
        } else {
            chosen = remaining[rng.next_below(r)];
        }

        out.push_back(chosen);
        remove_node(chosen);
        current = chosen;
    }
    return out;
}

} // namespace baco
