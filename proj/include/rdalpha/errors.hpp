#pragma once

#include <stdexcept>
#include <string>

namespace rdalpha {

/// Raised when an operation that assumes a connected graph meets an
/// unreachable vertex pair.
class DisconnectedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AlphaOutOfRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Jacobi sweep budget was exhausted before the off-diagonal mass
/// dropped below the requested threshold.
class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quotient matrix flagged as equitable produced eigenvalues with
/// imaginary parts above tolerance.
class ComplexSpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotRegularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested joined-union decomposition collapses to a complete graph
/// (cyclic group of prime-power order). Carries the order of that graph.
class DegenerateDecompositionError : public std::runtime_error {
public:
    DegenerateDecompositionError(const std::string& what, int order)
        : std::runtime_error(what), order_(order) {}
    int order() const { return order_; }

private:
    int order_;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rdalpha
