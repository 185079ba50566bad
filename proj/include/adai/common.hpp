#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace adai {

/// Spatial point; coordinates beyond the problem dimension stay zero.
using Point = std::array<double, 3>;

/// Invalid user input (configuration, layout, CLI arguments).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A loss or gradient term became NaN/Inf. `term()` names the residual family.
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string term, const std::string& what)
        : std::runtime_error(what), term_(std::move(term)) {}

    const std::string& term() const noexcept { return term_; }

private:
    std::string term_;
};

}  // namespace adai
