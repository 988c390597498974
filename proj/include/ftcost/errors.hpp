#pragma once

#include <stdexcept>
#include <string>

namespace ftcost {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed scheme-config document (not JSON, wrong JSON type, unknown key).
class ConfigSyntaxError : public Error {
public:
    using Error::Error;
};

/// Well-formed document whose content violates a model invariant.
class ConfigSemanticError : public Error {
public:
    using Error::Error;
};

/// Inputs outside the regime where a formula is valid (e.g. N*p >= 1, p0 >= p_thres).
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Matrix/vector shape mismatch.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside its documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace ftcost
