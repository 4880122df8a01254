#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealflow {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Matrix/vector size disagreement between operands.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Value-level violation: negative entry where non-negativity is required,
// wrong scalar domain, non-stochastic rows, and similar.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Input that violates a documented operation precondition
// (non-premagic matrix, all-zero matrix, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Malformed text input. Positions are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Structurally invalid network description (index out of range,
// duplicate edge, non-positive weight).
class InvalidNetworkError : public Error {
public:
    explicit InvalidNetworkError(const std::string& msg) : Error(msg) {}
};

// Node with no outgoing edge / zero row where a transition row is needed.
class DanglingNodeError : public Error {
public:
    DanglingNodeError(const std::string& msg, std::size_t node)
        : Error(msg), node_(node) {}

    std::size_t node() const { return node_; }

private:
    std::size_t node_;
};

// Support is not strongly connected where irreducibility is required.
class IrreducibilityError : public Error {
public:
    IrreducibilityError(const std::string& msg, std::size_t component_count)
        : Error(msg), component_count_(component_count) {}

    std::size_t component_count() const { return component_count_; }

private:
    std::size_t component_count_;
};

// Throughput vector is not a left fixed point of the transition matrix.
class ConservationError : public Error {
public:
    ConservationError(const std::string& msg, std::size_t worst_node)
        : Error(msg), worst_node_(worst_node) {}

    std::size_t worst_node() const { return worst_node_; }

private:
    std::size_t worst_node_;
};

// Iterative method did not reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual, std::size_t iterations)
        : Error(msg), residual_(residual), iterations_(iterations) {}

    double residual() const { return residual_; }
    std::size_t iterations() const { return iterations_; }

private:
    double residual_;
    std::size_t iterations_;
};

}  // namespace idealflow
