#pragma once

#include <stdexcept>
#include <string>

namespace derivsamp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The configuration does not give a complete interpolation set.
class NotCis : public Error {
public:
    using Error::Error;
};

/// A numerical procedure did not reach its target (tail bound, certificate, ...).
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Exact division in a table reduction left a remainder.
class TableMismatch : public Error {
public:
    using Error::Error;
};

/// A sample node landed on a point where the requested derivative is undefined.
class UndefinedSample : public Error {
public:
    UndefinedSample(const std::string& what, double node, int order)
        : Error(what), node_(node), order_(order) {}
    [[nodiscard]] double node() const noexcept { return node_; }
    [[nodiscard]] int order() const noexcept { return order_; }

private:
    double node_;
    int order_;
};

/// The sample window does not cover every node that contributes at t.
class InsufficientSamples : public Error {
public:
    InsufficientSamples(const std::string& what, long required_lo, long required_hi)
        : Error(what), lo_(required_lo), hi_(required_hi) {}
    [[nodiscard]] long required_lo() const noexcept { return lo_; }
    [[nodiscard]] long required_hi() const noexcept { return hi_; }

private:
    long lo_;
    long hi_;
};

}  // namespace derivsamp
