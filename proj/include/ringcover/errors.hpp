#pragma once

#include <stdexcept>
#include <string>

namespace ringcover {

// Base class for all domain errors raised by this library.
struct RingCoverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial text that cannot be parsed.
struct PolyParseError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// Operation undefined for the zero polynomial (e.g. factoring a polynomial
// that vanishes modulo p, or the fixed divisor of 0).
struct ZeroPolynomialError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// Residue arithmetic was requested modulo a non-prime.
struct CompositeModulusError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// A monic polynomial was required.
struct NonMonicError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// The defining polynomial of a number field must be irreducible of degree >= 2.
struct ReducibleError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// Ideal-power membership was requested beyond the configured work bound.
struct BoundExceededError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// Maximal-subring enumeration requires all components over one prime.
struct MixedPrimesError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// A prime was classified as relevant but produced no admissible residue
// degrees; signals an internal contradiction between the two filters.
struct EmptyFSetError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// Explicit ring too large for table construction or subring enumeration.
struct SizeBoundError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// Ingested addition/multiplication tables do not define a commutative ring.
struct InvalidRingTablesError : RingCoverError {
    using RingCoverError::RingCoverError;
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : RingCoverError {
    using RingCoverError::RingCoverError;
};

} // namespace ringcover
