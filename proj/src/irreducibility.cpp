#include "ringcover/irreducibility.hpp"

#include <algorithm>
#include <bitset>

#include "ringcover/errors.hpp"
#include "ringcover/poly_mod_p.hpp"

namespace ringcover {

namespace {

constexpr size_t kMaxDegree = 64; // degree bitmask width for the sieve

// Subset sums of the factor degrees: the degrees a rational factor could
// have if this modular factorization lifted.
std::bitset<kMaxDegree> degree_pattern(const FactorizationModP& fac) {
    std::bitset<kMaxDegree> reachable;
    reachable.set(0);
    for (const auto& [g, e] : fac.factors)
        for (int rep = 0; rep < e; ++rep) {
            std::bitset<kMaxDegree> next = reachable;
            for (size_t d = 0; d + static_cast<size_t>(g.degree()) < kMaxDegree; ++d)
                if (reachable.test(d)) next.set(d + static_cast<size_t>(g.degree()));
            reachable = next;
        }
    return reachable;
}

// Coefficient bound for monic factors of f (Landau-Mignotte, loose form).
Int factor_coeff_bound(const PolyInt& f) {
    Int norm2 = 0;
    for (const Int& c : f.coeffs()) norm2 += c * c;
    Int b = 1;
    while (b * b < norm2) b <<= 1;
    return (b + 1) * int_pow(Int(2), static_cast<unsigned long>(f.degree()) + 1);
}

// Symmetric representative in (-m/2, m/2].
Int symmetric_mod(const Int& a, const Int& m) {
    Int r = mod_floor(a, m);
    if (2 * r > m) r -= m;
    return r;
}

PolyInt symmetric_lift(const PolyModP& g, const Int& m) {
    std::vector<Int> c(g.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = symmetric_mod(g.coeff(i), m);
    return PolyInt(std::move(c));
}

PolyInt reduce_coeffs(const PolyInt& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (auto& x : c) x = mod_floor(x, m);
    return PolyInt(std::move(c));
}

// One linear Hensel step: given monic g_i with f == prod g_i (mod p^k) and
// the partial-fraction inverses l_i (sum l_i * prod_{j != i} g_j == 1 mod p),
// update the g_i so the congruence holds mod p^(k+1).
void hensel_step(const PolyInt& f, std::vector<PolyInt>& lifted,
                 const std::vector<PolyModP>& ell, const Int& p, const Int& pk) {
    PolyInt prod = PolyInt::constant(1);
    for (const auto& g : lifted) prod = prod * g;
    PolyInt err = f - prod;
    std::vector<Int> dc(err.coeffs());
    for (auto& x : dc) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
        if (r != 0) throw InternalError("hensel_step: drift off the modulus");
        x = q;
    }
    PolyModP delta = PolyModP(p, std::move(dc));
    for (size_t i = 0; i < lifted.size(); ++i) {
        PolyModP gi = PolyModP::from_int_poly(lifted[i], p);
        PolyModP di = (delta * ell[i]).mod(gi);
        lifted[i] = reduce_coeffs(lifted[i] + pk * di.lift(), pk * p);
        // keep the factor monic after reduction
        std::vector<Int> c = lifted[i].coeffs();
        c.resize(static_cast<size_t>(gi.degree()) + 1, Int(0));
        c.back() = 1;
        lifted[i] = PolyInt(std::move(c));
    }
}

// Does some product of a subset of the lifted modular factors give a proper
// monic divisor of f over the integers?
bool has_recombined_factor(const PolyInt& f, const std::vector<PolyInt>& lifted,
                           const Int& modulus, const std::bitset<kMaxDegree>& allowed) {
    size_t r = lifted.size();
    int n = f.degree();
    for (size_t mask = 1; mask + 1 < (size_t{1} << r); ++mask) {
        int deg = 0;
        for (size_t i = 0; i < r; ++i)
            if (mask & (size_t{1} << i)) deg += lifted[i].degree();
        if (deg == 0 || deg > n / 2) continue;
        if (!allowed.test(static_cast<size_t>(deg))) continue;
        PolyInt cand = PolyInt::constant(1);
        for (size_t i = 0; i < r; ++i)
            if (mask & (size_t{1} << i)) cand = reduce_coeffs(cand * lifted[i], modulus);
        cand = symmetric_lift(PolyModP::from_int_poly(cand, modulus), modulus);
        // candidate is monic by construction of the lifted factors
        PolyInt q, rem;
        PolyInt::divmod_monic(f, cand, q, rem);
        if (rem.is_zero()) return true;
    }
    return false;
}

} // namespace

bool certify_irreducible(const PolyInt& f) {
    if (!f.is_monic()) throw NonMonicError("certify_irreducible: polynomial must be monic");
    int n = f.degree();
    if (n < 1) throw InternalError("certify_irreducible: degree must be >= 1");
    if (n == 1) return true;
    if (f.coeff(0) == 0) return false; // x divides
    if (static_cast<size_t>(n) >= kMaxDegree) throw InternalError("certify_irreducible: degree too large");
    Int disc = discriminant(f);
    if (disc == 0) return false; // repeated factor

    // Quick pass and degree sieve over small primes with squarefree reduction.
    std::bitset<kMaxDegree> allowed;
    for (size_t d = 1; static_cast<int>(d) < n; ++d) allowed.set(d);
    bool have_fallback = false;
    FactorizationModP best;
    Int best_p = 0;
    int sieved = 0;
    for (long pl : primes_upto(200)) {
        Int p(pl);
        if (mod_floor(disc, p) == 0) continue;
        FactorizationModP fac = factor_mod_p(f, p);
        if (fac.factors.size() == 1) return true;
        allowed &= degree_pattern(fac);
        if (allowed.none() || (allowed.count() == 2 && allowed.test(0) &&
                               allowed.test(static_cast<size_t>(n))))
            return true;
        if (!have_fallback || fac.factors.size() < best.factors.size()) {
            best = fac;
            best_p = p;
            have_fallback = true;
        }
        if (++sieved >= 6 && have_fallback) break;
    }
    if (!have_fallback)
        throw InternalError("certify_irreducible: no squarefree prime found below 200");

    // Hensel-lift the best modular factorization until the modulus clears
    // the factor coefficient bound, then test recombinations.
    Int bound = factor_coeff_bound(f);
    std::vector<PolyInt> lifted;
    std::vector<PolyModP> ell;
    PolyModP fp = PolyModP::from_int_poly(f, best_p);
    for (const auto& [g, e] : best.factors) {
        (void)e; // squarefree prime: all multiplicities are 1
        lifted.push_back(g.lift());
        PolyModP others = fp.divexact(g);
        // inverse of (prod of the other factors) modulo g, via extended gcd
        PolyModP a = others.mod(g), m = g;
        PolyModP r0 = m, r1 = a;
        PolyModP s0 = PolyModP::zero(best_p), s1 = PolyModP::one(best_p);
        while (!r1.is_zero()) {
            PolyModP q, rem;
            PolyModP::divmod(r0, r1, q, rem);
            PolyModP s2 = s0 - (q * s1);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        if (r0.degree() != 0) throw InternalError("certify_irreducible: factors not coprime");
        ell.push_back((s0.scaled(mod_inverse(r0.coeff(0), best_p))).mod(g));
    }
    Int pk = best_p;
    while (pk <= 2 * bound) {
        hensel_step(f, lifted, ell, best_p, pk);
        pk *= best_p;
    }
    return !has_recombined_factor(f, lifted, pk, allowed);
}

} // namespace ringcover
