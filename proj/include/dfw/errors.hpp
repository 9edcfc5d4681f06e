#pragma once

#include <stdexcept>
#include <string>

namespace dfw {

/// Argument outside the mathematical domain of a function (e.g. K_nu at x <= 0).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation requested exactly at a singular point of a kernel.
class SingularityError : public DomainError {
public:
    explicit SingularityError(const std::string& what) : DomainError(what) {}
};

/// Result exceeds the representable double range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Linear system with no usable rank, empty inputs, shape mismatches.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dfw
