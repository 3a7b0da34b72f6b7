#pragma once
#include <stdexcept>
#include <string>

namespace ppquad {

// Precondition of an operation is violated by the input.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data (bad file, rotation that does not partition darts, ...).
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// A search failed although a theorem guarantees success; signals a bug, not an input problem.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

// Instance exceeds a configured exhaustion budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ppquad
