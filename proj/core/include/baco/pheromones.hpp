#pragma once

#include <cstdint>
#include <optional>

#include "baco/rng.hpp"
#include "baco/types.hpp"

namespace baco {

/// Bivalent pheromones on the chain graph, stored implicitly as the current
/// best path plus an initialized flag. Before the first deposit every edge
/// carries tau_min; afterwards exactly the edges of the best path carry
/// tau_max. With single-best update semantics the two representations are
/// equivalent, and this one is exact and O(n) per update.
class ChainPheromones {
  public:
    explicit ChainPheromones(std::uint32_t n);

    std::uint32_t size() const noexcept { return n_; }
    bool initialized() const noexcept { return best_.has_value(); }
    const BitString &best() const { return *best_; }

    /// Marks the edges of `path` with tau_max; everything else reverts to
    /// tau_min. Idempotent for equal paths.
    void deposit(BitString path);

    friend bool operator==(const ChainPheromones &, const ChainPheromones &) = default;

  private:
    std::uint32_t n_;
    std::optional<BitString> best_;
};

/// Bivalent pheromones on the complete digraph plus start node, stored the
/// same way. The tau_max edge set of an initialized state includes the edge
/// from the start node to the first node of the best path.
class PermutationPheromones {
  public:
    explicit PermutationPheromones(std::uint32_t n);

    std::uint32_t size() const noexcept { return n_; }
    bool initialized() const noexcept { return best_.has_value(); }
    const Permutation &best() const { return *best_; }

    void deposit(Permutation path);

    friend bool operator==(const PermutationPheromones &,
                           const PermutationPheromones &) = default;

  private:
    std::uint32_t n_;
    std::optional<Permutation> best_;
};

/// One ant walk across the chain graph. Per bit position, emits the best
/// path's bit with probability 1/(1+t) and its complement with probability
/// t/(1+t); uninitialized states yield uniform bits.
BitString chain_walk(const ChainPheromones &state, PheromoneRatio ratio, RandomSource &rng);

/// One ant walk across the complete digraph, starting at the start node and
/// visiting every node once. At each step the unvisited successor on the best
/// path (if any) is chosen with probability 1/(1+r*t) against r other
/// candidates; otherwise the choice is uniform. Uninitialized states yield a
/// uniform random permutation.
Permutation permutation_walk(const PermutationPheromones &state, PheromoneRatio ratio,
                             RandomSource &rng);

} // namespace baco
