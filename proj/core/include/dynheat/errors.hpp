#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynheat {

/// Thrown when a time stepper produces non-finite values or a linear solve
/// breaks down. Carries the offending step index.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace dynheat
