#pragma once

#include <stdexcept>
#include <string>

namespace ghgkit {

// Error taxonomy mirrored by the CLI exit codes: config=2, data=3, numeric=4.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
struct DomainError : NumericError {
    explicit DomainError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace ghgkit
