#pragma once

#include <stdexcept>
#include <string>

namespace subseaflush {

// Input violates a documented invariant. The message names the field.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A target leftover fraction that the exponential decay never reaches.
class UnreachableTargetError : public ValidationError {
public:
    explicit UnreachableTargetError(const std::string& what) : ValidationError(what) {}
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_residual, int iterations)
        : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations) {}

    double last_residual() const { return last_residual_; }
    int iterations() const { return iterations_; }

private:
    double last_residual_;
    int iterations_;
};

// Solved absolute pressure at some node dropped to zero or below.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, char node)
        : std::runtime_error(what), node_(node) {}

    char node() const { return node_; }

private:
    char node_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace subseaflush
