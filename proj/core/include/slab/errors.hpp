#pragma once

#include <stdexcept>
#include <string>

namespace slab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A map that was required to be onto is not.
struct NotSurjective : Error {
    using Error::Error;
};

/// An action that was required to be transitive is not.
struct NotTransitive : Error {
    using Error::Error;
};

/// An enumeration exceeded its declared resource bound.
struct ResourceBound : Error {
    using Error::Error;
};

}  // namespace slab
