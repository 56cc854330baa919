#pragma once

#include <stdexcept>
#include <string>

namespace fdonsker {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct InvalidArgument : Error {
    using Error::Error;
};
struct GridMismatch : Error {
    using Error::Error;
};
struct EmptyIntersection : Error {
    using Error::Error;
};
struct InvalidSpec : Error {
    using Error::Error;
};
struct NoClosedForm : Error {
    using Error::Error;
};
struct DegenerateVariance : Error {
    using Error::Error;
};
struct InsufficientSamples : Error {
    using Error::Error;
};
struct NonPositiveVariance : Error {
    using Error::Error;
};
struct InvalidConfig : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace fdonsker
