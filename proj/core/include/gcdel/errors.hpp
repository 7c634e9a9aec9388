#pragma once

#include <stdexcept>
#include <string>

namespace gcdel {

/// Invalid code/protocol configuration (bad parameters, non-primitive
/// polynomial, unsupported field size, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid argument to an otherwise well-configured operation
/// (wrong length, out-of-range position, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace gcdel
