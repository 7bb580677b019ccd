#pragma once

#include <stdexcept>
#include <string>

namespace hodgemc {

// Malformed or inconsistent caller-supplied data (dimension mismatch, bad
// schema, precondition failure). Maps to exit code 2 at the CLI.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A guaranteed identity failed to hold after a construction. Signals a bug
// in the library or a broken fixture, never a user mistake.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hodgemc
