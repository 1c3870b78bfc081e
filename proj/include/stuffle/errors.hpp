#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stuffle {

// Raised by the word/expression parsers. `column` is 1-based and points at
// the offending character of the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t column)
        : std::runtime_error(std::move(message)), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

// Raised when a word or index outside the admissible subalgebra (first
// letter index >= 2) is handed to an evaluation map.
class AdmissibilityError : public std::domain_error {
public:
    explicit AdmissibilityError(std::string message)
        : std::domain_error(std::move(message)) {}
};

// Raised when a linear combination would exceed the configured term cap
// (see LinComb::set_max_terms, driven by STUFFLE_MAX_TERMS in the CLI).
class TermLimitError : public std::runtime_error {
public:
    explicit TermLimitError(std::string message)
        : std::runtime_error(std::move(message)) {}
};

}  // namespace stuffle
