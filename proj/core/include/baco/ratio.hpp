#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "baco/types.hpp"

namespace baco {

/// Pheromone ratio rule, parsed from the grammar
///   FLOAT | FLOAT "/n" | FLOAT "/n^" FLOAT
/// e.g. "0.25", "1/n", "2/n^1.5". The rule resolves per problem size; the
/// resolved value must lie in (0, 1] for every requested n.
class RatioRule {
  public:
    enum class Form { Literal, OverN, OverNPow };

    static RatioRule parse(std::string_view text);
    static RatioRule literal(double value);

    Form form() const noexcept { return form_; }
    double coefficient() const noexcept { return coefficient_; }
    double exponent() const noexcept { return exponent_; }

    double resolve(std::uint32_t n) const;
    PheromoneRatio resolve_ratio(std::uint32_t n) const { return PheromoneRatio(resolve(n)); }

    std::string to_string() const;

  private:
    RatioRule(Form form, double coefficient, double exponent)
        : form_(form), coefficient_(coefficient), exponent_(exponent) {}

    Form form_;
    double coefficient_;
    double exponent_;
};

} // namespace baco
