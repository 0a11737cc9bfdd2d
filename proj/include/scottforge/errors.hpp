#pragma once

#include <stdexcept>
#include <string>

namespace scottforge {

// Thrown when an exhaustive enumeration or truncation exceeds its configured size bound.
struct bound_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the chain-index search cannot produce an absorbing index.
struct absorbing_index_not_found : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace scottforge
