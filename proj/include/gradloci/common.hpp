#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gradloci {

// Raised when a computation exceeds its configured resource budget.
// Distinct from mathematical failures so callers can retry with a
// larger budget or report a partial result.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent user input (parse errors, bad descriptors,
// dimension mismatches, invalid order ideals, ...).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested operation is mathematically undefined for the given input
// (zero polynomial degree, unit ideal dimension, point not on variety, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Resource limits for Groebner-type computations.  Hard errors, never
// silent truncation: when a limit is hit, BudgetExceeded is thrown.
struct Budget {
    long max_pairs = 4000000;            // S-pairs processed per basis
    long long max_reduction_steps = 400000000;  // single reduction steps
    long max_basis = 100000;             // basis elements

    Budget() = default;
    static Budget tight(long pairs) {
        Budget b;
        b.max_pairs = pairs;
        return b;
    }
};

}  // namespace gradloci
