#pragma once

#include <vector>

#include "ringcover/integer.hpp"
#include "ringcover/matrix.hpp"
#include "ringcover/number_field.hpp"
#include "ringcover/order.hpp"
#include "ringcover/poly_mod_p.hpp"

namespace ringcover {

// One prime ideal P over p in the p-maximal order, with enough attached data
// to compute in the residue field A/P = F_p[y]/(m).
struct PrimeIdealData {
    Int p;
    int e = 1; // ramification index: v_P(p)
    int f = 1; // residual degree: dim_{F_p} A/P

    // P as a full-rank sublattice of the order, staircase Hermite form in
    // omega-coordinates.  Exactly f diagonal entries equal p (the others 1);
    // their positions are `support`.
    IntMat lattice;
    std::vector<size_t> support;

    // pi with P = pO + pi*O, in omega-coordinates.
    std::vector<Int> second_generator;

    // Residue field presentation: gamma = res_generator maps to y, m is its
    // minimal polynomial (monic irreducible of degree f), res_pow row k holds
    // the support-coordinates of gamma^k, and res_unpow is its inverse mod p.
    std::vector<Int> res_generator;
    PolyModP res_min_poly;
    IntMat res_pow;
    IntMat res_unpow;

    bool contains(const std::vector<Int>& x) const;
    // Image of x in A/P as a polynomial in y of degree < f.
    PolyModP residue(const std::vector<Int>& x) const;
    // Minimal polynomial over F_p of the image of x in A/P.
    PolyModP residue_min_poly(const std::vector<Int>& x) const;
    // Canonical order-coordinates of an element reducing to the given residue.
    std::vector<Int> lift_residue(const PolyModP& c) const;
};

// Full factorization of pO in the p-maximal order O.
struct SplittingData {
    Int p;
    OrderBasis order;
    std::vector<PrimeIdealData> ideals; // sorted by (f, e, second_generator)
    long index_val = 0;                 // v_p([O : Z[theta]])

    // lambda_p(f): number of ideals of residual degree f.
    int degree_count(int f) const;
};

SplittingData split_prime(const NumberField& K, const Int& p);

// v_p of the index [A : Z[theta]].
long index_valuation(const NumberField& K, const Int& p);

// Does some residual degree f satisfy lambda_p(f) > N_p(f)?
bool is_common_index_divisor(const SplittingData& s);

// Product of two ideals given as full-rank staircase lattices in
// omega-coordinates (lattice spanned by the pairwise row products).
IntMat ideal_product(const OrderBasis& o, const IntMat& a, const IntMat& b);

// Membership of x in P^k.  k*f*e is capped (default 8) to keep the lattice
// products small; throws BoundExceededError beyond the cap.
bool in_ideal_power(const OrderBasis& order, const PrimeIdealData& P,
                    const std::vector<Int>& x, int k, int bound_cap = 8);

// For ideal lattices with A + B = O: an element u of A with 1 - u in B.
// This is the CRT splitting element behind the lifted diagonal subrings.
std::vector<Int> idempotent_split(const OrderBasis& o, const IntMat& a, const IntMat& b);

} // namespace ringcover
