#pragma once

#include <stdexcept>
#include <string>

namespace qdilog {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violations (bad parameters, values outside the supported regime).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An evaluation point too close to a pole of Phi_b; carries the offending lattice index.
struct PoleProximityError : Error {
    long m;
    long n;
    PoleProximityError(long m_, long n_, const std::string& msg)
        : Error(msg), m(m_), n(n_) {}
};

// A series or quadrature failed to reach the requested accuracy within its budget.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace qdilog
