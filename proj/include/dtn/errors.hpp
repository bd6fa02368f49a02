#pragma once

#include <stdexcept>
#include <string>

namespace dtn {

// Thrown when a quantity the underlying theorems guarantee fails to check
// out. Seeing this means an implementation bug, never bad user input.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what)
        : std::logic_error(what) {}
};

} // namespace dtn
