#include "baco/ratio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace baco {

namespace {

double parse_positive_float(std::string_view text, std::string_view what) {
    if (text.empty()) throw std::invalid_argument(std::string(what) + " is empty");
    std::string buffer(text);
    char *end = nullptr;
    const double value = std::strtod(buffer.c_str(), &end);
    if (end != buffer.c_str() + buffer.size()) {
        throw std::invalid_argument("cannot parse " + std::string(what) + " '" + buffer + "'");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(what) + " must be a positive finite number");
    }
    return value;
}

} // namespace

RatioRule RatioRule::parse(std::string_view text) {
    const auto slash = text.find("/n");
    if (slash == std::string_view::npos) {
        return literal(parse_positive_float(text, "pheromone ratio"));
    }
    const double c = parse_positive_float(text.substr(0, slash), "ratio coefficient");
    const auto tail = text.substr(slash + 2);
    if (tail.empty()) return RatioRule(Form::OverN, c, 1.0);
    if (tail[0] != '^') {
        throw std::invalid_argument("malformed ratio expression '" + std::string(text) + "'");
    }
    const double s = parse_positive_float(tail.substr(1), "ratio exponent");
    return RatioRule(Form::OverNPow, c, s);
}

RatioRule RatioRule::literal(double value) {
    if (!(value > 0.0) || value > 1.0) {
        throw std::invalid_argument("literal pheromone ratio must lie in (0, 1]");
    }
    return RatioRule(Form::Literal, value, 0.0);
}

double RatioRule::resolve(std::uint32_t n) const {
    if (n == 0) throw std::invalid_argument("problem size must be at least 1");
    double value = coefficient_;
    switch (form_) {
    case Form::Literal:
        break;
    case Form::OverN:
        value = coefficient_ / static_cast<double>(n);
        break;
    case Form::OverNPow:
        value = coefficient_ / std::pow(static_cast<double>(n), exponent_);
        break;
    }
    if (!(value > 0.0) || value > 1.0) {
        throw std::invalid_argument("ratio rule " + to_string() + " resolves to " +
                                    std::to_string(value) + " at n=" + std::to_string(n) +
                                    ", outside (0, 1]");
    }
    return value;
}

std::string RatioRule::to_string() const {
    char buffer[64];
    switch (form_) {
    case Form::Literal:
        std::snprintf(buffer, sizeof buffer, "%.17g", coefficient_);
        return buffer;
    case Form::OverN:
        std::snprintf(buffer, sizeof buffer, "%.17g/n", coefficient_);
        return buffer;
    case Form::OverNPow: {
        std::snprintf(buffer, sizeof buffer, "%.17g/n^%.17g", coefficient_, exponent_);
        return buffer;
    }
    }
    return "?";
}

} // namespace baco
