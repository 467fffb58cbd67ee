#pragma once

#include <stdexcept>
#include <string>

namespace wavesr {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid arguments, malformed configuration, contract violations by the caller.
struct UsageError : Error {
    using Error::Error;
};

/// Unreadable/unwritable files, unsupported formats, mismatched inputs.
struct DataError : Error {
    using Error::Error;
};

/// Non-finite values where finite ones are required (e.g. diverged training).
struct NumericError : Error {
    using Error::Error;
};

} // namespace wavesr
