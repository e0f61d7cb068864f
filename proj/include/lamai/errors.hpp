#pragma once

#include <stdexcept>
#include <string>

namespace lamai {

/// Configuration errors: invalid names, negative variances, inconsistent dimensions.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failures: detector divergence, quadrature grids too coarse,
/// inconsistent threshold searches.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, int iteration = -1)
        : std::runtime_error(what), iteration_(iteration) {}

    /// Iteration at which the failure occurred, or -1 when not applicable.
    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

}  // namespace lamai
