#pragma once

#include <string>
#include <vector>

#include "ringcover/integer.hpp"

namespace ringcover {

// Univariate polynomial over the integers.  Coefficients are stored
// constant term first; the zero polynomial is the empty vector and every
// stored polynomial has a nonzero leading coefficient.
class PolyInt {
    std::vector<Int> c_;

    void normalize();

public:
    PolyInt() = default;
    explicit PolyInt(std::vector<Int> coeffs);
    static PolyInt from_leading(const std::vector<Int>& leading_first);
    static PolyInt constant(const Int& c);
    static PolyInt monomial(const Int& c, size_t deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& coeff(size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int evaluate(const Int& x) const;
    PolyInt derivative() const;
    Int content() const; // gcd of coefficients, 0 for the zero polynomial

    PolyInt operator-() const;
    friend PolyInt operator+(const PolyInt& a, const PolyInt& b);
    friend PolyInt operator-(const PolyInt& a, const PolyInt& b);
    friend PolyInt operator*(const PolyInt& a, const PolyInt& b);
    friend PolyInt operator*(const Int& c, const PolyInt& a);

    // Division with remainder by a monic divisor (exact over the integers).
    static void divmod_monic(const PolyInt& num, const PolyInt& den, PolyInt& q, PolyInt& r);

    bool operator==(const PolyInt& o) const = default;

    // Human-readable form, e.g. "x^6+x^5+x^4-x^3+x^2+x+6".
    std::string to_string() const;
    // Comma-separated coefficient list, leading coefficient first.
    std::string to_coeff_string() const;

    // Accepts both text forms above; throws PolyParseError.
    static PolyInt parse(const std::string& text);
};

// Resultant of f and g via the Sylvester matrix (fraction-free determinant).
Int resultant(const PolyInt& f, const PolyInt& g);

// Discriminant of a monic polynomial of degree >= 1.
Int discriminant(const PolyInt& f);

// gcd of the values f(0), f(1), ..., f(deg f) — the divisor shared by all
// integer values of f.  Throws ZeroPolynomialError on the zero polynomial.
Int fixed_divisor(const PolyInt& f);

} // namespace ringcover
