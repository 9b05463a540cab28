#pragma once

#include <stdexcept>
#include <string>

namespace singspec {

// Domain violations (bad argument ranges, branch cuts) use std::domain_error
// directly.  The named types below signal conditions that callers may want to
// handle specially.

struct FriedrichsUndefined : std::domain_error {
    explicit FriedrichsUndefined(const std::string& what)
        : std::domain_error(what) {}
};

// Log-derivative or resolvent evaluated at (or too close to) an eigenvalue.
struct PoleAt : std::runtime_error {
    double x;
    explicit PoleAt(double x_, const std::string& what)
        : std::runtime_error(what), x(x_) {}
};

struct EigenvalueHit : std::runtime_error {
    explicit EigenvalueHit(const std::string& what)
        : std::runtime_error(what) {}
};

// Root bracketing could not isolate the expected sign change.
struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& what)
        : std::runtime_error(what) {}
};

struct ContourTooClose : std::runtime_error {
    explicit ContourTooClose(const std::string& what)
        : std::runtime_error(what) {}
};

struct NegativeEigenvalueContour : std::runtime_error {
    explicit NegativeEigenvalueContour(const std::string& what)
        : std::runtime_error(what) {}
};

struct SlowConvergence : std::runtime_error {
    explicit SlowConvergence(const std::string& what)
        : std::runtime_error(what) {}
};

struct StepFailure : std::runtime_error {
    explicit StepFailure(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace singspec
