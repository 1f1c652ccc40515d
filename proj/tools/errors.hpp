#pragma once

#include <stdexcept>

namespace fdsec_cli {

/// Malformed, unknown or missing configuration entries. Exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File system failures. Exit status 1.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A validation run found a disagreement. Exit status 1.
class ValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fdsec_cli
