#pragma once

#include <stdexcept>
#include <string>

namespace lfoc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two morphisms (or a morphism and an object) do not meet at a common boundary.
class BoundaryError : public Error {
public:
    using Error::Error;
};

/// Objects of different kinds (set vs. graph) were mixed.
class KindError : public Error {
public:
    using Error::Error;
};

/// A requested enumeration would exceed the configured safety cap.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Malformed input: a rule pattern, a morphism literal, a reference.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace lfoc
