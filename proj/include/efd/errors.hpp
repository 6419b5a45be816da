#pragma once

#include <stdexcept>
#include <string>

namespace efd {

// Bad caller input: wrong lengths, non-finite samples, out-of-range arguments.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

// Unreadable or malformed data files.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerically inconsistent configuration (inadmissible gamma, convention violations).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace efd
