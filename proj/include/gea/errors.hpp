#pragma once

#include <stdexcept>
#include <string>

namespace gea {

/// The two generators span the same line in so(3) (or su(2)).
struct DependentGenerators : std::runtime_error {
    explicit DependentGenerators(const std::string& msg) : std::runtime_error(msg) {}
};

/// A two-valued control cannot generate the group for this system.
struct NotControllableWithTwoLevels : std::runtime_error {
    explicit NotControllableWithTwoLevels(const std::string& msg) : std::runtime_error(msg) {}
};

/// A residual failed its tolerance after all solver branches were tried.
/// Indicates a logic or tolerance bug, never expected on valid input.
struct InternalSolverFailure : std::runtime_error {
    explicit InternalSolverFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gea
