#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace baco {

enum class Problem { LeadingOnes, OneMax, Sorting };

std::string_view to_string(Problem problem);
std::optional<Problem> problem_from_string(std::string_view name);

/// Pheromone ratio t = tau_min / tau_max. The only pheromone parameter the
/// algorithm depends on; the individual tau values never materialize.
class PheromoneRatio {
  public:
    explicit PheromoneRatio(double value) : value_(value) {
        if (!(value > 0.0) || value > 1.0) {
            throw std::invalid_argument(
                "pheromone ratio must lie in (0, 1], got " + std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

  private:
    double value_;
};

/// Candidate solution on the chain construction graph.
using BitString = std::vector<std::uint8_t>;

/// Candidate solution on the complete-digraph construction graph: the visiting
/// order of the nodes 0..n-1, each exactly once.
using Permutation = std::vector<std::uint32_t>;

bool is_valid_permutation(const Permutation &order);

/// Outcome of a single run: the loop iterations executed until the optimum was
/// constructed (the initial construction is not counted).
struct RunRecord {
    Problem problem;
    std::uint32_t n;
    double ratio;
    std::uint64_t seed;
    std::uint64_t iterations;
    bool hit_max_iters;

    friend bool operator==(const RunRecord &, const RunRecord &) = default;
};

inline constexpr std::uint64_t kDefaultMaxIterations = 1'000'000'000;

} // namespace baco
