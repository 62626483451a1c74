#pragma once

#include <stdexcept>
#include <string>

namespace shiftconv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient beyond the known truncation order was requested.
struct truncation_error : error {
    using error::error;
};

// Argument outside the domain of an operation (odd weight, |z| >= 1, ...).
struct domain_error : error {
    using error::error;
};

// Evaluation at (or within the refusal radius of) a pole.
struct pole_error : error {
    using error::error;
};

struct convergence_error : error {
    using error::error;
};

// Bad command-line or run configuration.
struct config_error : error {
    using error::error;
};

}  // namespace shiftconv
