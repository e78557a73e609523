#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

/// Malformed external input (files, CLI arguments, vertex indices < 1).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation applied outside its mathematical domain (e.g. link of a non-face).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Random matrix failed the structural post-checks of shifting after all retries.
struct genericity_error : std::runtime_error {
    explicit genericity_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A desk-scale guard tripped (instance too large for exact search).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ekr
