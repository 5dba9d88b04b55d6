#ifndef DENGUE_ERRORS_HPP
#define DENGUE_ERRORS_HPP

#include <stdexcept>

namespace dengue {

// Bad user input: config files, CLI values, schedule descriptors.
// The CLI maps this to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure at run time: divergence, negative states beyond
// tolerance, unbracketed roots. The CLI maps this to exit status 1.
struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dengue

#endif
