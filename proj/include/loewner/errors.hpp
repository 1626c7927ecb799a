#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct SpectrumOutOfDomain : Error {
    using Error::Error;
};
struct FunctionDomainError : Error {
    using Error::Error;
};
struct NotPositiveDefinite : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct ZeroDerivative : Error {
    using Error::Error;
};
struct NotMonotone : Error {
    using Error::Error;
};
struct NoRoot : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct InvalidSpec : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace loewner
