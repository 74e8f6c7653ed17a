#pragma once

#include <stdexcept>
#include <string>

namespace houseod {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rank-one (or multi-column) Cholesky downdate would destroy positive
/// definiteness. `column` is the offending column for multi-column downdates,
/// -1 for the single-vector case.
struct IndefiniteDowndateError : Error {
    explicit IndefiniteDowndateError(int col = -1)
        : Error(col < 0 ? std::string("indefinite downdate")
                        : "indefinite downdate at column " + std::to_string(col)),
          column(col) {}
    int column;
};

/// Deviation set passed to the QR square-root builder has numerical rank < n.
struct DegenerateDeviationsError : Error {
    using Error::Error;
};

/// (skewness, kurtosis) pair violates the moment feasibility bound
/// kurt >= skew^2 + 1.
struct MomentFeasibilityError : Error {
    using Error::Error;
};

/// Invalid tuning parameter (UT kappa, CUT order, ...).
struct ParameterError : Error {
    using Error::Error;
};

/// Measurement covariance not invertible during a filter update.
struct SingularMeasCovError : Error {
    using Error::Error;
};

/// Integration produced non-finite rates.
struct IntegrationError : Error {
    using Error::Error;
};

/// Malformed input file (gravity coefficients, scenario config, CSV).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace houseod
