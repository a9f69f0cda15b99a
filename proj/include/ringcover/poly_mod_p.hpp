#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringcover/integer.hpp"
#include "ringcover/poly_int.hpp"

namespace ringcover {

// Univariate polynomial over F_p.  Coefficients are stored constant term
// first, reduced into [0, p); the leading coefficient is nonzero.
class PolyModP {
    Int p_{0};
    std::vector<Int> c_;

    void normalize();

public:
    PolyModP() = default; // placeholder; only valid objects carry p >= 2
    PolyModP(Int p, std::vector<Int> coeffs);
    static PolyModP from_int_poly(const PolyInt& f, const Int& p);
    static PolyModP zero(const Int& p) { return PolyModP(p, {}); }
    static PolyModP one(const Int& p) { return PolyModP(p, {Int(1)}); }
    static PolyModP x(const Int& p) { return PolyModP(p, {Int(0), Int(1)}); }
    static PolyModP monomial(const Int& p, const Int& c, size_t deg);

    const Int& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Int& coeff(size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    PolyInt lift() const; // coefficients in [0, p)

    friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
    PolyModP scaled(const Int& c) const;

    static void divmod(const PolyModP& num, const PolyModP& den, PolyModP& q, PolyModP& r);
    PolyModP mod(const PolyModP& m) const;
    PolyModP divexact(const PolyModP& den) const;

    PolyModP monic() const;
    PolyModP derivative() const;
    Int evaluate(const Int& x) const;

    bool is_irreducible() const; // deterministic test via x^(p^d) - x

    bool operator==(const PolyModP& o) const = default;
    std::string to_string() const;
};

PolyModP poly_gcd(PolyModP a, PolyModP b); // monic gcd
PolyModP poly_pow_mod(const PolyModP& base, Int e, const PolyModP& m);

// Total order used wherever factor lists must be deterministic: by degree,
// then by the coefficient tuple, constant term first.
bool poly_order_less(const PolyModP& a, const PolyModP& b);

struct FactorizationModP {
    Int p;
    Int unit; // leading coefficient of the input, in [0, p)
    std::vector<std::pair<PolyModP, int>> factors; // monic irreducible, sorted

    PolyModP expand() const;
};

// Factor f mod p into monic irreducibles.  Throws CompositeModulusError when
// p is not prime and ZeroPolynomialError when f vanishes mod p.
FactorizationModP factor_mod_p(const PolyInt& f, const Int& p);
FactorizationModP factor_mod_p(const PolyModP& f);

// Number of monic irreducible polynomials of degree f over F_p
// (Moebius-inverted count).
Int count_monic_irreducible(const Int& p, unsigned f);

// Component count below which a product of copies of F_{p^f} still admits a
// single generator: p when f == 1, one more than the irreducible count
// otherwise.
Int covering_threshold(const Int& p, unsigned f);

unsigned distinct_prime_factor_count(unsigned n);

// Number of maximal subrings of the field F_{p^f}: its maximal subfields
// (one per prime divisor of f) for f >= 2, and the zero subring for f == 1.
unsigned count_maximal_subrings_of_field(unsigned f);

// Lexicographically least monic irreducible of degree f over F_p, ordering
// coefficient tuples constant term first.
PolyModP least_irreducible(const Int& p, unsigned f);

} // namespace ringcover
