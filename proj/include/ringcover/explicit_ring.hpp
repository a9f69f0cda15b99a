#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringcover/coverability.hpp"
#include "ringcover/integer.hpp"
#include "ringcover/poly_mod_p.hpp"

namespace ringcover {

// A finite commutative ring given by complete structure tables.  Used as the
// ground-truth engine: closures, exhaustive subring enumeration, and exact
// covering numbers are all computed directly from the tables.
struct ExplicitRing {
    size_t size = 0;
    Int characteristic; // exponent of the additive group
    size_t zero = 0;    // index of the additive identity
    std::vector<std::string> labels;
    std::vector<uint16_t> add; // row-major size x size
    std::vector<uint16_t> mul;
    std::vector<uint16_t> neg; // additive inverse of each element

    // Component metadata when built as a product of fields: (p, f) per
    // factor, elements indexed in mixed radix with component 0 fastest.
    std::vector<std::pair<Int, unsigned>> components;
    std::vector<PolyModP> component_minpolys;

    size_t plus(size_t a, size_t b) const { return add[a * size + b]; }
    size_t times(size_t a, size_t b) const { return mul[a * size + b]; }

    // Index arithmetic for product rings.
    size_t component_of(size_t elem, size_t comp) const;
    size_t with_component(size_t elem, size_t comp, size_t value) const;

    // Full axiom check (commutative ring, additive group); throws
    // InvalidRingTablesError with a description of the first failure.
    void validate() const;
};

// F_{p^{f_1}} x ... x F_{p^{f_s}}, each factor presented as F_p[x]/(m_i)
// with m_i the least monic irreducible of degree f_i.  The product size is
// capped at size_bound (default 4096) by SizeBoundError.
ExplicitRing product_of_fields(const Int& p, const std::vector<unsigned>& degrees,
                               size_t size_bound = 4096);

// Same, but with caller-chosen irreducible presentations (used to mirror the
// residue fields of a computed splitting exactly).
ExplicitRing product_of_fields_with_minpolys(const Int& p, const std::vector<PolyModP>& minpolys,
                                             size_t size_bound = 4096);

// Parse {"labels": [...], "add": [[...]], "mul": [[...]]} and validate the
// axioms.  Throws InvalidRingTablesError (bad shape or axioms) and
// SizeBoundError (more than 100 elements).
ExplicitRing ring_from_json(const std::string& json_text);

// Subset of ring elements as a bitset.
struct SubringSet {
    size_t universe = 0;
    std::vector<uint64_t> bits;

    explicit SubringSet(size_t n = 0) : universe(n), bits((n + 63) / 64, 0) {}
    bool test(size_t i) const { return (bits[i / 64] >> (i % 64)) & 1; }
    void set(size_t i) { bits[i / 64] |= uint64_t(1) << (i % 64); }
    size_t count() const;
    bool is_subset_of(const SubringSet& o) const;
    std::vector<size_t> elements() const;

    bool operator==(const SubringSet& o) const = default;
    bool operator<(const SubringSet& o) const; // lexicographic by element order
};

// Smallest subring (closed under +, negation, *; no unit required)
// containing the seed elements.
SubringSet closure(const ExplicitRing& r, const std::vector<size_t>& seed);

// A ring is coverable by proper subrings iff no single element generates it.
bool is_coverable(const ExplicitRing& r);

// Every subring, by breadth-first closure of one added generator at a time.
// Requires size <= 100 (SizeBoundError).
std::vector<SubringSet> enumerate_subrings(const ExplicitRing& r);

// The maximal proper subrings among enumerate_subrings.
std::vector<SubringSet> maximal_subrings(const ExplicitRing& r);

struct CoverSolution {
    std::vector<SubringSet> parts;
    bool minimal = false;
};

// Exact covering number: NotCoverable when a single element generates,
// otherwise Finite(m) with the lexicographically least minimum cover by
// maximal subrings.  Requires size <= 100 (SizeBoundError).
SigmaValue covering_number_exact(const ExplicitRing& r, CoverSolution* solution = nullptr);

// Element set of a descriptor inside a product-of-fields ring (components
// with equal degree must share a presentation for twisted diagonals).
SubringSet realize_descriptor(const ExplicitRing& r, const MaxSubringDescriptor& d);

} // namespace ringcover
