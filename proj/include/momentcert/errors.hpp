#pragma once

#include <stdexcept>
#include <string>

namespace momentcert {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };

// An operation would need moments beyond the truncation degree of the
// functional. Operations refuse rather than extrapolate.
struct DegreeExceeded : Error { using Error::Error; };

struct NonRealWeight : Error { using Error::Error; };

struct NotPSD : Error {
    NotPSD(const std::string& msg, double eig) : Error(msg), min_eig(eig) {}
    double min_eig;
};

struct MissingMoment : Error { using Error::Error; };
struct NonPositiveEvenMoment : Error { using Error::Error; };
struct TooFewTerms : Error { using Error::Error; };

struct QuadratureNotConverged : Error {
    QuadratureNotConverged(const std::string& msg, double est, double err)
        : Error(msg), estimate(est), achieved_error(err) {}
    double estimate;
    double achieved_error;
};

struct NonAtomicOracle : Error { using Error::Error; };
struct MomentOverflow : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };

}  // namespace momentcert
