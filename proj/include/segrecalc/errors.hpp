#pragma once

#include <stdexcept>
#include <string>

namespace segrecalc {

// Error hierarchy mirrored by the CLI exit codes:
//   input_error (and subclasses)  -> exit 1
//   genericity_error              -> exit 2
//   resource_error                -> exit 3
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// Syntax error in polynomial or ideal-file text; position is a 0-based
// character offset into the offending string.
struct parse_error : input_error {
    parse_error(const std::string& msg, std::size_t pos)
        : input_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct ring_mismatch : input_error {
    explicit ring_mismatch(const std::string& msg) : input_error(msg) {}
};

// Raised when an operation needs the generator degree (or similar) to be
// nonzero mod the field characteristic and it is not.
struct characteristic_error : input_error {
    explicit characteristic_error(const std::string& msg) : input_error(msg) {}
};

// A randomized construction failed its dimension/agreement checks after the
// configured number of retries. Never silently retried beyond the budget.
struct genericity_error : error {
    explicit genericity_error(const std::string& msg) : error(msg) {}
};

// A computation exceeded the configured step/degree budget.
struct resource_error : error {
    explicit resource_error(const std::string& msg) : error(msg) {}
};

}  // namespace segrecalc
