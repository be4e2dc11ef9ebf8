#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace adic {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad space/model parameters, unparsable text.
struct InvalidSpec : Error {
    using Error::Error;
};

struct ParseError : InvalidSpec {
    using InvalidSpec::InvalidSpec;
};

/// A documented operation precondition was violated.
struct Precondition : Error {
    using Error::Error;
};

struct DivisionByZero : Precondition {
    DivisionByZero() : Precondition("division by zero") {}
};

struct ContextMismatch : Precondition {
    ContextMismatch() : Precondition("mixing values from different arithmetic contexts") {}
};

struct ChartMismatch : Precondition {
    explicit ChartMismatch(const std::string& what) : Precondition(what) {}
};

struct OutOfChart : Precondition {
    explicit OutOfChart(const std::string& what) : Precondition(what) {}
};

struct NotNearIdentity : Precondition {
    NotNearIdentity() : Precondition("matrix is not strictly close to the identity (val(B - I) must be > 0)") {}
};

struct MissingQ : Precondition {
    MissingQ() : Precondition("operation needs an explicit multiplier q, but the parameters carry only v(q)") {}
};

/// A pivot (or comparison) became indistinguishable from zero at working precision.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

/// Iteration budget ran out before the requested target; carries the decay trace.
struct NonConvergence : Error {
    std::vector<std::string> trace;
    int iterations = 0;
    NonConvergence(const std::string& what, std::vector<std::string> trace_vals, int iters)
        : Error(what), trace(std::move(trace_vals)), iterations(iters) {}
};

}  // namespace adic
