#ifndef SPECGRAPH_ERRORS_HPP
#define SPECGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specgraph {

/// Base class for everything a caller can violate at the domain level
/// (bad graph for the requested quantity, operation parameter out of range).
/// Input-syntax problems use std::invalid_argument / std::runtime_error directly.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRangeError final : DomainError {
    using DomainError::DomainError;
};

struct SelfLoopError final : DomainError {
    using DomainError::DomainError;
};

struct CycleTooSmallError final : DomainError {
    using DomainError::DomainError;
};

struct EmptyGraphError final : DomainError {
    using DomainError::DomainError;
};

struct IsolatedVertexError final : DomainError {
    using DomainError::DomainError;
};

struct DisconnectedError final : DomainError {
    using DomainError::DomainError;
};

/// Operation parameter below the construction's minimum.
struct MTooSmallError final : DomainError {
    using DomainError::DomainError;
};

/// H1 copy pair invalid (equal or out of [0, m)).
struct InvalidCopyPairError final : DomainError {
    using DomainError::DomainError;
};

/// Closed-form requested outside the range its derivation is stated for.
struct MOutOfTheoremRangeError final : DomainError {
    using DomainError::DomainError;
};

/// Eigensolver failed to reach the requested off-diagonal norm.
struct NoConvergenceError final : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace specgraph

#endif
