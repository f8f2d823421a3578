#pragma once

#include <stdexcept>
#include <string>

namespace hlz {

/// Argument outside the mathematical domain of an operation (negative radius,
/// non-positive exponent, malformed interval, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation requested at a jump point of a simple function, where the
/// Hilbert transform has a logarithmic singularity.
class SingularPointError : public DomainError {
public:
    explicit SingularPointError(const std::string& what) : DomainError(what) {}
};

/// Input is well formed but outside what the library defines a result for.
class UnsupportedInputError : public std::invalid_argument {
public:
    explicit UnsupportedInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A hypothesis required by an operation (e.g. an A_1 weight) is not met.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

inline void require_domain(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

} // namespace hlz
