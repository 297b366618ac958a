#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace zetascan {

// Base of every computational failure the library reports. Carries a stable
// name so callers (the CLI in particular) can emit machine-readable error
// lines of the form "error: <name>: <message>".
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Gamma/digamma argument within 1e-12 of a non-positive integer.
class PoleError : public EvaluationError {
public:
    explicit PoleError(const std::string& msg) : EvaluationError("PoleError", msg) {}
};

// log of sin taken within 1e-12 of a zero of the sine factor.
class ZeroArgument : public EvaluationError {
public:
    explicit ZeroArgument(const std::string& msg) : EvaluationError("ZeroArgument", msg) {}
};

// Evaluation requested inside the exclusion disc around the simple pole s = 1.
class PoleProximity : public EvaluationError {
public:
    explicit PoleProximity(const std::string& msg) : EvaluationError("PoleProximity", msg) {}
};

// Internal error estimate exceeded the configured target. The best-effort
// value and the estimate ride along.
class AccuracyLoss : public EvaluationError {
public:
    AccuracyLoss(const std::string& msg, std::complex<double> best_effort, double estimate)
        : EvaluationError("AccuracyLoss", msg), best_effort_(best_effort), estimate_(estimate) {}
    std::complex<double> best_effort() const noexcept { return best_effort_; }
    double estimate() const noexcept { return estimate_; }

private:
    std::complex<double> best_effort_;
    double estimate_;
};

// Operation asked for outside its region of validity (e.g. the Euler product
// off the half-plane of absolute convergence).
class DomainError : public EvaluationError {
public:
    explicit DomainError(const std::string& msg) : EvaluationError("DomainError", msg) {}
};

// A quotient whose divisor fell below the safe threshold.
class DivisorVanishes : public EvaluationError {
public:
    explicit DivisorVanishes(const std::string& msg) : EvaluationError("DivisorVanishes", msg) {}
};

// Identity check requested at a point where its reference magnitude is ~0.
class NearZeroInput : public EvaluationError {
public:
    explicit NearZeroInput(const std::string& msg) : EvaluationError("NearZeroInput", msg) {}
};

// Re-evaluated bracket end points no longer straddle zero.
class LostBracket : public EvaluationError {
public:
    explicit LostBracket(const std::string& msg) : EvaluationError("LostBracket", msg) {}
};

// Checkpoint file failed validation (magic, version, size, checksum, or a
// grid/config mismatch against the resuming run).
class CorruptCheckpoint : public EvaluationError {
public:
    explicit CorruptCheckpoint(const std::string& msg)
        : EvaluationError("CorruptCheckpoint", msg) {}
};

}  // namespace zetascan
