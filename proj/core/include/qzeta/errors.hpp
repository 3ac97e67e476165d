#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

// Error taxonomy. The CLI maps each class onto a fixed exit code.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "precondition"; }
};

/// A check that should hold exactly (or within its error budget) did not.
class VerificationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "verification"; }
};

/// max_terms (or a coefficient table) ran out before the tolerance was met.
class BudgetExhausted : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "budget"; }
};

/// A division by an exact zero (vanishing denominator, singular ratio).
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

/// The ansatz linear system has no solution at some step n.
class InconsistentSystem : public VerificationError {
public:
    InconsistentSystem(int step, const std::string& what)
        : VerificationError(what), step_(step) {}
    int step() const noexcept { return step_; }
    const char* kind() const noexcept override { return "inconsistent_system"; }

private:
    int step_;
};

/// A boundary limit of a summation formula did not fall under the error budget.
class NonVanishingBoundary : public VerificationError {
public:
    using VerificationError::VerificationError;
    const char* kind() const noexcept override { return "non_vanishing_boundary"; }
};

}  // namespace qzeta
