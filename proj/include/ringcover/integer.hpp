#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace ringcover {

// Arbitrary-precision integer used throughout.
using Int = mpz_class;

Int int_pow(const Int& base, unsigned long exp);
bool is_prime(const Int& v);

// Largest k with p^k | v; requires v != 0 and p >= 2.
unsigned p_valuation(const Int& v, const Int& p);

// Representative of a modulo m in [0, m); requires m > 0.
Int mod_floor(const Int& a, const Int& m);

// Inverse of a modulo m; requires gcd(a, m) == 1.
Int mod_inverse(const Int& a, const Int& m);

// Checked narrowing; throws InternalError when out of range.
long to_long(const Int& v);

std::vector<long> primes_upto(long bound);
std::vector<long> distinct_prime_divisors(long n);
Int binomial(unsigned long n, unsigned long k);

// Seed for every randomized routine in the library.  Fixed default so all
// results are reproducible run to run; overridable once at process start.
std::uint64_t factorization_seed();
void set_factorization_seed(std::uint64_t seed);

// Deterministic RNG.  Each randomized operation constructs its own instance
// from the global seed, so results do not depend on call order.
class DetRng {
    std::mt19937_64 eng_;

public:
    explicit DetRng(std::uint64_t seed = factorization_seed()) : eng_(seed) {}
    std::uint64_t raw() { return eng_(); }
    // Uniform value in [0, m); requires m >= 1.
    Int below(const Int& m);
};

} // namespace ringcover
