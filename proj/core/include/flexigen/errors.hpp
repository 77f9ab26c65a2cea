#pragma once

#include <stdexcept>
#include <string>

namespace flexigen {

// Raised by the config parser: syntax errors (with byte position), unknown
// keys, missing mandatory tables, type mismatches.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a trip would drive the battery below 0%. Reaching this from
// generator code means the forced-charge machinery was disabled in the
// config, or the config is infeasible (a single leg needs more than a full
// battery).
class DepletionError : public std::runtime_error {
public:
    explicit DepletionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flexigen
