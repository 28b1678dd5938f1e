#pragma once

#include <stdexcept>

namespace lindim {

/// The requested computation is outside the range where the closed formulas
/// are valid (more than n+2 points).
struct ScopeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The computation presupposes a non-empty system.
struct EmptySystemError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace lindim
