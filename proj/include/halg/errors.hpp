#pragma once

#include <stdexcept>
#include <string>

namespace halg {

// Elements tied to different algebra parameters must never be mixed.
struct ParamsMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Representation maps and the star/tilde/plus involutions are defined on
// the division algebras H(1,1) / O(1,1,1) only.
struct DomainMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownProposition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Characteristic cubic does not have three distinct real roots.
struct NotThreeDistinctRealRoots : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Three real roots exist but the dominant one is not > 1.
struct DominantRootNotGreaterThanOne : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace halg
