#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace agq {

/// A caller broke a documented precondition (bad dimensions, bad arguments).
class ContractError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach its target.
class NumericalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ConvergenceError : public NumericalError
{
public:
    ConvergenceError(const std::string& what, int iterations, std::string diagnostic)
        : NumericalError(what + " after " + std::to_string(iterations) + " iterations (" +
                         diagnostic + ")"),
          iterations_(iterations), diagnostic_(std::move(diagnostic))
    {}

    int iterations() const noexcept { return iterations_; }
    const std::string& diagnostic() const noexcept { return diagnostic_; }

private:
    int iterations_;
    std::string diagnostic_;
};

/// Algorithm 1 ran past its degree cap; carries the best residual seen per degree.
class DegreeExhaustedError : public NumericalError
{
public:
    struct Attempt
    {
        int degree;
        std::string residual;
    };

    DegreeExhaustedError(const std::string& what, std::vector<Attempt> attempts)
        : NumericalError(what), attempts_(std::move(attempts))
    {}

    const std::vector<Attempt>& attempts() const noexcept { return attempts_; }

private:
    std::vector<Attempt> attempts_;
};

} // namespace agq
