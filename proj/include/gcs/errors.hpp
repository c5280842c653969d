#pragma once

#include <stdexcept>
#include <string>

namespace gcs {

/// Base class of all library errors. `kind()` is a stable kebab-case token
/// suitable for machine-readable error markers (sweep rows, CLI messages).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// p >= p*(n): the single-power problem has no positive decaying solution.
class SupercriticalExponent : public Error {
public:
    explicit SupercriticalExponent(const std::string& what)
        : Error("supercritical-exponent", what) {}
};

/// The initial-amplitude scan found no undershoot/overshoot sign change.
class NoBracket : public Error {
public:
    explicit NoBracket(const std::string& what) : Error("no-bracket", what) {}
};

/// An iteration cap was reached before the requested tolerance.
class MaxIterations : public Error {
public:
    explicit MaxIterations(const std::string& what) : Error("max-iterations", what) {}
};

class NonpositiveOmega : public Error {
public:
    explicit NonpositiveOmega(const std::string& what) : Error("nonpositive-omega", what) {}
};

/// A decay fit was requested on data that cannot support one.
class DegenerateTail : public Error {
public:
    explicit DegenerateTail(const std::string& what) : Error("degenerate-tail", what) {}
};

/// A root is predicted by the asymptotics but lies outside the scan domain.
class RootScanExhausted : public Error {
public:
    explicit RootScanExhausted(const std::string& what) : Error("root-scan-exhausted", what) {}
};

/// The reconstructed branch fails the scalar consistency check
/// |1 + k int A^r - omega| <= tol * omega.
class ConsistencyViolation : public Error {
public:
    explicit ConsistencyViolation(const std::string& what)
        : Error("consistency-violation", what) {}
};

/// Requested a solution where the classification says none exists.
/// Mathematically correct nonexistence, distinct from numerical failure.
class NoSolutionExists : public Error {
public:
    explicit NoSolutionExists(const std::string& what) : Error("no-solution-exists", what) {}
};

} // namespace gcs
