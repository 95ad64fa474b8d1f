#pragma once

#include <stdexcept>
#include <string>

namespace gadgetforge {

// Base of every error the library reports. The CLI maps each subclass onto an
// exit code, so new error kinds should derive from the closest existing one.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad file contents, invalid parameters, violated degree bounds.
class InputError : public Error {
public:
    using Error::Error;
};

// A caller broke an operation's documented precondition (e.g. lifting a
// solution that is not gadget-complete).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Refusal to materialize or enumerate something above a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

class TimeoutError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

// A repair bound or fence claim check failed while running in strict mode.
class ClaimViolation : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace gadgetforge
