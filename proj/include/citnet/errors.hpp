#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citnet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed Pajek input. line() is 1-based; 0 when the problem is not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Raised when an operation needs an acyclic network. vertex() lies on a cycle.
class CycleError : public Error {
public:
    CycleError(std::size_t vertex, const std::string& what) : Error(what), vertex_(vertex) {}

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

}  // namespace citnet
