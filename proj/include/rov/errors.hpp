#pragma once

#include <stdexcept>
#include <string>

namespace rov {

// Every failure carries a short machine-greppable name ("InvalidM",
// "NoConvergence", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Parameter or argument rejected before any computation ran.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A kernel denominator fell below the hard floor (1e-14).
class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(const std::string& detail)
        : Error("DegenerateDenominator", detail) {}
};

// Adaptive quadrature exhausted its recursion depth above tolerance.
class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& detail)
        : Error("NoConvergence", detail) {}
};

// singleton_value called while neither |lambda|=1 nor z0=0 holds.
class NotSingleton : public Error {
public:
    explicit NotSingleton(const std::string& detail)
        : Error("NotSingleton", detail) {}
};

// Fewer than three usable vertices after duplicate filtering.
class DegeneratePolygon : public Error {
public:
    explicit DegeneratePolygon(const std::string& detail)
        : Error("DegeneratePolygon", detail) {}
};

}  // namespace rov
