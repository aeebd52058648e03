#pragma once

#include <stdexcept>
#include <string>

namespace meander {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step word has unequal numbers of N and E steps.
struct NotBalanced : Error {
    using Error::Error;
};

// A prefix of the step word has more E than N steps.
struct BelowDiagonal : Error {
    using Error::Error;
};

// Step word contains a character outside the expected alphabet.
struct InvalidCharacter : Error {
    using Error::Error;
};

// Operation on two paths requires equal sizes.
struct SizeMismatch : Error {
    using Error::Error;
};

// The given step position does not hold a peak or valley.
struct NotACorner : Error {
    using Error::Error;
};

// Flipping a height-1 peak would leave the Dyck universe.
struct WouldCrossDiagonal : Error {
    using Error::Error;
};

// Path has a peak at even height (not in the all-odd family).
struct NotInA : Error {
    using Error::Error;
};

// Path has a peak at odd height (not in the all-even family).
struct NotInB : Error {
    using Error::Error;
};

// Path is not a fixed point of the corner-flip involution.
struct NotInF : Error {
    using Error::Error;
};

// A step-pair pattern that the conversion table rules out appeared anyway.
struct MalformedPairs : Error {
    using Error::Error;
};

// Requested sweep exceeds the configured size guard.
struct BoundExceeded : Error {
    using Error::Error;
};

// Unsupported reference-sequence id.
struct UnknownSequence : Error {
    using Error::Error;
};

// Invariant violation inside the library itself.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace meander
