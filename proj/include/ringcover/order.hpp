#pragma once

#include <utility>
#include <vector>

#include "ringcover/integer.hpp"
#include "ringcover/matrix.hpp"
#include "ringcover/number_field.hpp"
#include "ringcover/poly_int.hpp"
#include "ringcover/poly_mod_p.hpp"

namespace ringcover {

// An order in a number field, stored relative to the power basis of theta.
//
// Row i of `basis` holds denom * omega_i written in the power basis
// 1, theta, ..., theta^(n-1); `denom` is a power of `p`.  The basis matrix is
// kept in staircase Hermite form (lower triangular, positive pivots on the
// diagonal, entries below a pivot reduced modulo it), which forces
// omega_0 = 1.  `mult[i]` stores the products omega_i * omega_j: its row j is
// the coordinate vector of that product in the omega basis.
struct OrderBasis {
    Int p;
    int n = 0;
    PolyInt field_poly;
    IntMat basis;
    Int denom;
    bool p_maximal = false;
    std::vector<IntMat> mult;

    // Product of two elements given in omega-coordinates.
    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> mul_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                             const Int& m) const;
    std::vector<Int> pow_mod(std::vector<Int> a, Int e, const Int& m) const;

    // Matrix of multiplication by `a`: row j = omega-coordinates of a*omega_j.
    IntMat mult_matrix(const std::vector<Int>& a) const;

    // omega-coordinates of the rational integer c (omega_0 = 1).
    std::vector<Int> integer_coords(const Int& c) const;
};

// The order Z[theta] itself.
OrderBasis order_of_power_basis(const NumberField& K, const Int& p);

// Dedekind's test: is Z[theta] maximal at p?  Returns the flag together with
// the obstruction gcd(gbar, hbar, Mbar) in F_p[x], which has degree zero
// exactly when Z[theta] is p-maximal.
std::pair<bool, PolyModP> dedekind_p_maximal(const NumberField& K, const Int& p);

// The p-maximal overorder of Z[theta], computed by repeatedly replacing the
// order with the multiplier ring of the radical of pO.
OrderBasis p_maximal_order(const NumberField& K, const Int& p);

// v_p of the index [O : Z[theta]] for an order stored as above.
long index_valuation(const OrderBasis& order);

// omega-coordinates of theta.
std::vector<Int> theta_coords(const OrderBasis& order);

// omega-coordinates of g(theta) for an integer polynomial g.
std::vector<Int> coords_from_power_poly(const OrderBasis& order, const PolyInt& g);

// Basis of the radical of pO as a full-rank lattice in omega-coordinates
// (staircase Hermite form; contains p times the identity).
IntMat p_radical(const OrderBasis& order);

namespace detail {
// Assemble an order from a scaled basis, canonicalising the basis and
// verifying multiplicative closure while building the tables.
OrderBasis make_order(const PolyInt& f, const Int& p, IntMat scaled_basis, Int denom,
                      bool p_maximal);
} // namespace detail

} // namespace ringcover
