#pragma once

#include <stdexcept>
#include <string>

namespace deltaj {

// Base class for all library failures. Thrown on violated preconditions so
// callers (and the CLI, which maps these to exit code 1) can catch one type.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed ring-spec / module-spec / template text.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// Structurally valid input that violates a mathematical precondition
// (improper ideal where a proper one is required, axiom failure, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

// Construction would exceed the configured ring-order cap.
struct cap_error : error {
    explicit cap_error(const std::string& what) : error(what) {}
};

}  // namespace deltaj
