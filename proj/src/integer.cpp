#include "ringcover/integer.hpp"

#include <atomic>
#include <limits>

#include "ringcover/errors.hpp"

namespace ringcover {

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool is_prime(const Int& v) {
    if (v < 2) return false;
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

unsigned p_valuation(const Int& v, const Int& p) {
    if (v == 0 || p < 2) throw InternalError("p_valuation: bad arguments");
    unsigned k = 0;
    Int t = abs(v), q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return k;
        t = q;
        ++k;
    }
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InternalError("mod_inverse: not invertible");
    return r;
}

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw InternalError("to_long: out of range");
    return v.get_si();
}

std::vector<long> primes_upto(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * 2; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

std::vector<long> distinct_prime_divisors(long n) {
    std::vector<long> out;
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {
std::atomic<std::uint64_t> g_seed{0x5eedc0de9ull};
}

std::uint64_t factorization_seed() { return g_seed.load(); }
void set_factorization_seed(std::uint64_t seed) { g_seed.store(seed); }

Int DetRng::below(const Int& m) {
    if (m <= 0) throw InternalError("DetRng::below: bound must be positive");
    if (m == 1) return 0;
    // Rejection sampling: draw exactly as many bits as the bound has.
    size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (;;) {
        Int v = 0;
        for (size_t got = 0; got < bits; got += 32) {
            v <<= 32;
            v += static_cast<unsigned long>(eng_() >> 32);
        }
        Int mask = int_pow(Int(2), static_cast<unsigned long>(bits)) - 1;
        v &= mask;
        if (v < m) return v;
    }
}

} // namespace ringcover
