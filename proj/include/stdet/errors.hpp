#pragma once

#include <stdexcept>
#include <string>

namespace stdet {

// Malformed descriptor text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input with an invalid value (p not prime, e = 0, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed the configured work budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An exact division required by a counting formula failed.  This is
// evidence against the formula, not a numeric accident, so it carries
// enough context to be reported verbatim.
struct DivisibilityError : std::runtime_error {
    DivisibilityError(const std::string& what, std::string numerator, std::string denominator)
        : std::runtime_error(what), numerator(std::move(numerator)), denominator(std::move(denominator)) {}
    std::string numerator;
    std::string denominator;
};

} // namespace stdet
