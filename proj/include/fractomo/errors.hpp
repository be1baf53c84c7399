#pragma once

#include <stdexcept>
#include <string>

namespace fractomo {

// Thrown when an input value is outside the mathematical domain of an
// operation (degenerate transform order, zero tomography parameters, ...).
// The CLI maps this to exit code 3.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input files or option strings. CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fractomo
