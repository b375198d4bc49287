#include "baco/objectives.hpp"

namespace baco {

std::uint32_t leading_ones(const BitString &bits) {
    std::uint32_t count = 0;
    for (auto b : bits) {
        if (b == 0) break;
        ++count;
    }
    return count;
}

std::uint32_t one_max(const BitString &bits) {
    std::uint32_t count = 0;
    for (auto b : bits) count += b;
    return count;
}

std::uint32_t final_position_prefix(const Permutation &order) {
    std::uint32_t count = 0;
    while (count < order.size() && order[count] == count) ++count;
    return count;
}

} // namespace baco
