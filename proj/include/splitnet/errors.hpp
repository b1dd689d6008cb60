#pragma once

#include <stdexcept>
#include <string>

namespace splitnet {

// Base for everything thrown on purpose. CLI maps input_error to exit 2,
// bound_error to exit 3, anything else derived from error to exit 1.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or mathematically invalid input (bad syntax, not 1-nested,
// not Kalmanson, negative weight where positive required).
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// Structurally valid request outside a supported enumeration bound.
struct bound_error : error {
    explicit bound_error(const std::string& msg) : error(msg) {}
};

}  // namespace splitnet
