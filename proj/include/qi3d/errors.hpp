#pragma once

#include <stdexcept>
#include <string>

namespace qi3d {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// coords
struct FocalSetError : Error        { using Error::Error; };
struct AxisError : Error            { using Error::Error; };
struct RangeError : Error           { using Error::Error; };
struct CoordinatePlaneError : Error { using Error::Error; };
struct NorthPoleError : Error       { using Error::Error; };

// potentials / sphere
struct CoincidenceError : Error { using Error::Error; };
struct CenterError : Error      { using Error::Error; };
struct DegenerateError : Error  { using Error::Error; };

// dynamics
struct GradientError : Error     { using Error::Error; };
struct StepFailure : Error       { using Error::Error; };
struct EndpointError : Error     { using Error::Error; };
struct TurningPointError : Error { using Error::Error; };

// spectral
struct ParameterError : Error   { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };

// cli
struct ConfigError : Error { using Error::Error; };

}  // namespace qi3d
