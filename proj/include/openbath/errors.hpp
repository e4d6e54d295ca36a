// errors.hpp — exception hierarchy shared by all openbath modules

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace openbath {

// Validation errors come from bad inputs (exit code 2 in the CLI);
// numerical errors come from failed computations (exit code 3).
enum class ErrorKind { Validation, Numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

private:
    ErrorKind kind_;
    std::string name_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error(ErrorKind::Validation, "InvalidArgument", w) {}
};

struct NonConvergent : Error {
    explicit NonConvergent(const std::string& w) : Error(ErrorKind::Numerical, "NonConvergent", w) {}
};

struct UnphysicalKernel : Error {
    explicit UnphysicalKernel(const std::string& w) : Error(ErrorKind::Numerical, "UnphysicalKernel", w) {}
};

struct IRDivergent : Error {
    explicit IRDivergent(const std::string& w) : Error(ErrorKind::Validation, "IRDivergent", w) {}
};

struct StepTooLarge : Error {
    explicit StepTooLarge(const std::string& w) : Error(ErrorKind::Validation, "StepTooLarge", w) {}
};

struct Overdamped : Error {
    explicit Overdamped(const std::string& w) : Error(ErrorKind::Validation, "Overdamped", w) {}
};

struct PoleOnAxis : Error {
    explicit PoleOnAxis(const std::string& w) : Error(ErrorKind::Numerical, "PoleOnAxis", w) {}
};

struct DeltaRegularization : Error {
    explicit DeltaRegularization(const std::string& w) : Error(ErrorKind::Validation, "DeltaRegularization", w) {}
};

struct AmplifierRegime : Error {
    explicit AmplifierRegime(const std::string& w) : Error(ErrorKind::Validation, "AmplifierRegime", w) {}
};

struct WindowInvalid : Error {
    explicit WindowInvalid(const std::string& w) : Error(ErrorKind::Validation, "WindowInvalid", w) {}
};

struct DimensionBudget : Error {
    explicit DimensionBudget(const std::string& w) : Error(ErrorKind::Validation, "DimensionBudget", w) {}
};

} // namespace openbath
