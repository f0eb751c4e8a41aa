#pragma once

#include <stdexcept>
#include <string>

namespace mapgirth {

// Malformed or inconsistent input data (CLI exit code 2).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Map outside the requested girth/orientation class (CLI exit code 3).
struct class_error : std::runtime_error {
    explicit class_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Resource guard tripped (CLI exit code 4).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broken; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check(bool cond, const char* msg) {
    if (!cond) throw internal_error(msg);
}

}  // namespace mapgirth
