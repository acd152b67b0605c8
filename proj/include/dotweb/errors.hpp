#ifndef DOTWEB_ERRORS_HPP
#define DOTWEB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dotweb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A denominator binomial C(N-2k, M-k) vanished while summing the b coefficients.
struct DegenerateDivision : Error {
    using Error::Error;
};

// Requested a two-qubit reduction whose pair population does not exist (e.g. up-up with M < 2).
struct InvalidPair : Error {
    using Error::Error;
};

// Requested a one-qubit measure for a spin population that is absent.
struct InvalidSpin : Error {
    using Error::Error;
};

// Brute-force path refused: the 2^N state would be too large.
struct SizeLimit : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

} // namespace dotweb

#endif
