#include "baco/types.hpp"

#include <algorithm>

namespace baco {

std::string_view to_string(Problem problem) {
    switch (problem) {
    case Problem::LeadingOnes:
        return "leadingones";
    case Problem::OneMax:
        return "onemax";
    case Problem::Sorting:
        return "sorting";
    }
    return "unknown";
}

std::optional<Problem> problem_from_string(std::string_view name) {
    if (name == "leadingones") return Problem::LeadingOnes;
    if (name == "onemax") return Problem::OneMax;
    if (name == "sorting") return Problem::Sorting;
    return std::nullopt;
}

bool is_valid_permutation(const Permutation &order) {
    std::vector<bool> seen(order.size(), false);
    for (auto v : order) {
        if (v >= order.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

} // namespace baco
