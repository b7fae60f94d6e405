#pragma once

#include <stdexcept>
#include <string>

namespace hypflex {

/// A trigonometric law produced a cosine outside [-1, 1]: the requested
/// triangle (plane or spherical) is not realizable.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& what, double offending_cosine)
        : std::domain_error(what), offending_cosine_(offending_cosine) {}

    double offending_cosine() const noexcept { return offending_cosine_; }

private:
    double offending_cosine_;
};

/// A deformed length h + t*u, p + t*v or q + t*w left (0, inf).
class DeformationRangeError : public std::domain_error {
public:
    DeformationRangeError(const std::string& length_name, double value)
        : std::domain_error("deformation collapses length " + length_name + " (value " +
                            std::to_string(value) + ")"),
          length_name_(length_name),
          value_(value) {}

    const std::string& length_name() const noexcept { return length_name_; }
    double value() const noexcept { return value_; }

private:
    std::string length_name_;
    double value_;
};

class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The flexibility relation has no real solution on the requested branch.
class NoSolutionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A derivative would divide by a vanishing sine.
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Explicit coordinates disagree with the synthetic construction.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hypflex
