#pragma once

#include <stdexcept>

namespace spincav {

// Invalid configuration, arguments, or violated preconditions.
// The command line tool maps this to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A response function was evaluated at an exact real-axis pole
// (vanishing linewidth together with vanishing real denominator).
// The command line tool maps this to exit code 2.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spincav
