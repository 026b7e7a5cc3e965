#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccc {

// Base class for every error raised by the library. The CLI maps these to
// exit codes; callers that do not care about the category can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed caller input: negative ids, bad parameters, length mismatches.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (last residual " + std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Katz series does not converge for the requested attenuation.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Spectral radius is zero (nilpotent adjacency), so no Perron vector exists.
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

// A graphon kernel produced a value outside [0, 1].
class KernelError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ccc
