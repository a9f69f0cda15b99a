#pragma once

#include <string>
#include <vector>

#include "ringcover/integer.hpp"
#include "ringcover/number_field.hpp"
#include "ringcover/poly_mod_p.hpp"
#include "ringcover/splitting.hpp"

namespace ringcover {

// One prime-ideal factor P^h of a modulus, carried as (p, f, e, h).  When the
// entry is tied to a computed splitting, ideal_index points into it.
struct IdealSpecEntry {
    Int p;
    int f = 1;
    int e = 1;
    int h = 1;
    int ideal_index = -1;
};

struct FaultyResult {
    bool faulty = false;
    Int p; // witness, valid when faulty
    int f = 0;
};

// Does some (p, f) satisfy tau_p(f) <= number of distinct ideals of that
// residual degree?  The witness is the first such pair in (p, f) order.
FaultyResult is_faulty(const std::vector<IdealSpecEntry>& spec);

// Value of a covering number: a finite count, infinity, not-coverable (no
// covering by proper subrings exists at all), or the undecided join of the
// last two.
enum class SigmaKind { Finite = 0, Infinite = 1, InfiniteOrNotCoverable = 2, NotCoverable = 3 };

struct SigmaValue {
    SigmaKind kind = SigmaKind::Infinite;
    Int m; // valid when kind == Finite

    static SigmaValue finite(Int count) { return {SigmaKind::Finite, std::move(count)}; }
    static SigmaValue infinite() { return {SigmaKind::Infinite, 0}; }
    static SigmaValue undecided() { return {SigmaKind::InfiniteOrNotCoverable, 0}; }
    static SigmaValue not_coverable() { return {SigmaKind::NotCoverable, 0}; }

    bool operator==(const SigmaValue& o) const = default;
};

// Total order: finite values by count, then Infinite < InfiniteOrNotCoverable
// < NotCoverable.
bool sigma_less(const SigmaValue& a, const SigmaValue& b);

std::string sigma_to_string(const SigmaValue& v);

// Number of maximal subrings of the product of tau_p(f) copies of F_{p^f},
// which is also its covering number: f*C(tau,2) + tau*w(f), with w(1) = 1
// (the zero subring) and w(f) = number of distinct primes of f otherwise.
Int sigma_formula(const Int& p, unsigned f);

// Primes p <= degree whose splitting makes the ring finitely coverable
// through residue quotients: p is a common index divisor or has at least p
// ideals of residual degree 1.
std::vector<Int> compute_P_set(const std::vector<SplittingData>& splittings);

// Residual degrees f with lambda_p(f) >= tau_p(f); requires p qualified by
// compute_P_set and throws EmptyFSetError if the result would be empty.
std::vector<unsigned> compute_F_set(const SplittingData& splitting);

struct SigmaWitness {
    SigmaValue sigma;
    Int p;        // witness prime, valid when finite
    unsigned f = 0; // witness residual degree, valid when finite
};

// sigma of the full ring of integers: the minimum of sigma_formula over
// p in the P-set and f in its F-set, or undecided when the P-set is empty.
SigmaWitness sigma_A(const std::vector<SplittingData>& splittings);

bool finitely_coverable(const std::vector<SplittingData>& splittings);

// A component F_{p^f} with local exponent k (the quotient A/P^k).
struct RingComponent {
    Int p;
    unsigned f = 1;
    unsigned k = 1;
};

// Description of one maximal subring of a product of local residue rings.
struct MaxSubringDescriptor {
    enum class Kind {
        ZeroSubfield,    // {0} in a degree-1 component
        Subfield,        // proper maximal subfield F_{p^{f/l}}, l prime, l | f
        Exceptional,     // conductor-P^{k-1} subring, requires k >= 3
        TwistedDiagonal, // graph of an isomorphism between two equal-degree
                         // components, twisted by Frobenius^t
    };
    Kind kind = Kind::ZeroSubfield;
    int i = 0;                   // component index
    int j = -1;                  // partner component for diagonals
    unsigned subfield_prime = 0; // l for Subfield
    unsigned frobenius = 0;      // t for TwistedDiagonal

    bool operator==(const MaxSubringDescriptor& o) const = default;
};

// Complete list of maximal subrings of prod_i A/P_i^{k_i} (all components
// over the same prime; MixedPrimesError otherwise).
std::vector<MaxSubringDescriptor> enumerate_max_subrings(const std::vector<RingComponent>& comps);

// One component of a quotient modulus: which ideal of the splitting, and to
// which power it appears.
struct QuotientTarget {
    size_t ideal_index = 0;
    int h = 1;
};

struct GeneratorCheck {
    bool ok = false;
    int failed_condition = 0; // 1, 2 or 3 when !ok
    int comp_i = -1;          // ideal index of the offending component
    int comp_j = -1;          // partner for condition 2
};

// Does the image of elem generate A/(prod P_i^{h_i}) as a non-unital ring?
// Checks: (1) each residue is nonzero with minimal polynomial of full degree
// f_i, (2) the minimal polynomials are pairwise distinct, (3) for components
// with e >= 2 and h >= 2, that polynomial evaluated at elem stays outside
// P_i^2.
GeneratorCheck generator_test(const SplittingData& s, const std::vector<Int>& elem,
                              const std::vector<QuotientTarget>& targets, int bound_cap = 8);

// One subring in a covering of the ring of integers, given by its lift.
struct CoverLift {
    enum class Kind {
        Ideal,    // the prime ideal P_i itself (degree-1 component)
        Subfield, // preimage of the maximal subfield F_{p^{f/l}} of A/P_i
        Diagonal, // P_i P_j + Z[mu], the twisted-diagonal lift
    };
    Kind kind = Kind::Ideal;
    size_t i = 0;
    size_t j = 0;                // Diagonal only
    unsigned subfield_prime = 0; // Subfield only
    unsigned frobenius = 0;      // Diagonal only
    std::vector<Int> mu;         // Diagonal only, omega-coordinates
};

struct CoveringDescription {
    Int p;
    unsigned f = 0;
    Int count;                         // = sigma_formula(p, f)
    std::vector<size_t> ideal_indices; // the tau ideals of degree f used
    std::vector<CoverLift> lifts;
};

struct CoverReport {
    PolyInt poly;
    int degree = 0;
    Int disc;
    std::vector<SplittingData> splittings; // one per prime scanned, ascending
    std::vector<Int> P_set;
    std::vector<std::pair<Int, std::vector<unsigned>>> F_sets; // keyed by p in P_set
    SigmaWitness sigma;
    std::string classification; // "finitely_coverable" or
                                // "not_finitely_coverable_undecided"
    bool has_covering = false;
    CoveringDescription covering; // valid when has_covering
};

// Scan all primes up to prime_cap (default: the field degree, but at least 2)
// and assemble the full coverability report.
CoverReport build_cover_report(const NumberField& K, long prime_cap = 0);

// The canonical image of y under the isomorphism A/P_i -> A/P_j determined
// by the Frobenius exponent t (components of equal residual degree f >= 2):
// the t-th Frobenius power of the least root of P_i's minimal polynomial in
// A/P_j's presentation.
PolyModP diagonal_image_of_generator(const PrimeIdealData& pi, const PrimeIdealData& pj,
                                     unsigned t);

// Element mu whose residues are (y, Frobenius^t of the least root) at the
// two ideals — the generator of a lifted twisted-diagonal subring.  For
// residual degree 1 this is simply 1.
std::vector<Int> diagonal_mu(const OrderBasis& order, const PrimeIdealData& pi,
                             const PrimeIdealData& pj, unsigned t);

} // namespace ringcover
