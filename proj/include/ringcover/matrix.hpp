#pragma once

#include <vector>

#include "ringcover/integer.hpp"

namespace ringcover {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;

public:
    IntMat() = default;
    IntMat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}
    static IntMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Int> row(size_t r) const;
    void set_row(size_t r, const std::vector<Int>& v);

    bool operator==(const IntMat& o) const = default;
};

IntMat from_rows(const std::vector<std::vector<Int>>& rows);
IntMat stack(const IntMat& top, const IntMat& bottom);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_scale(const IntMat& a, const Int& c);
std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMat& m);

// Determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMat m);

// Hermite normal form of the row lattice, staircase orientation: the pivot
// of row i sits at column i, entries to the right of a pivot are zero,
// pivots are positive, and in each pivot column the entries of the later
// rows are reduced into [0, pivot).  Basis element i is therefore a
// combination of coordinates 0..i only (for an order basis: a polynomial
// in theta of degree exactly i, so row 0 is a pure constant).  Zero rows
// are dropped: the result has rank-many rows ordered by pivot column.
IntMat hnf_lower(IntMat m);

// Same, also producing U (rank x input-rows) with U * input == result.
IntMat hnf_lower_transform(const IntMat& m, IntMat* U);

// Solve x * H = v exactly over the integers, H square staircase with
// nonzero diagonal.  Returns false when no integral solution exists.
bool solve_staircase(const IntMat& H, const std::vector<Int>& v, std::vector<Int>& x);

// Canonical representative of v modulo the row lattice of a square
// staircase H: coordinate i of the result lies in [0, H[i][i]).
std::vector<Int> reduce_mod_lattice(const IntMat& H, std::vector<Int> v);

// --- arithmetic modulo a prime ---

IntMat mat_mod(IntMat m, const Int& p);
IntMat mat_mul_mod(const IntMat& a, const IntMat& b, const Int& p);
IntMat mat_pow_mod(IntMat m, unsigned long e, const Int& p);

// In-place reduced row echelon form mod p; returns the rank and, when
// requested, the pivot column of each nonzero row.
size_t rref_mod_p(IntMat& m, const Int& p, std::vector<size_t>* pivots = nullptr);

// Basis (as rows, themselves in RREF) of {v : v * m == 0 mod p}.
IntMat left_kernel_mod_p(const IntMat& m, const Int& p);

// Coordinates of v in the row span of an RREF matrix; false if not in span.
bool express_in_rowspan_mod_p(const IntMat& rref, const std::vector<size_t>& pivots,
                              std::vector<Int> v, const Int& p, std::vector<Int>* coords);

} // namespace ringcover
