#pragma once

#include "ringcover/poly_int.hpp"

namespace ringcover {

// Decide whether a monic integer polynomial of degree >= 1 is irreducible
// over the rationals.  Exact: a quick pass looks for a prime below 100
// modulo which the polynomial stays irreducible, a degree sieve intersects
// the factor-degree patterns of several good primes, and any survivor is
// settled by lifting a modular factorization and testing recombined factor
// candidates by exact division.  Throws NonMonicError on non-monic input.
bool certify_irreducible(const PolyInt& f);

} // namespace ringcover
